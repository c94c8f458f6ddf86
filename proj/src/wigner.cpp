#include "dwigner/wigner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dwigner {

void require_even(int n) {
  if (n < 2 || n % 2 != 0) {
    std::ostringstream msg;
    msg << "N must be even and >= 2, got " << n;
    throw Error(ErrorCode::OddDimension, msg.str());
  }
}

WignerTable::WignerTable(int n, RealMatrix values) : n_(n), values_(std::move(values)) {
  require_even(n);
  if (values_.rows() != 2 * n || values_.cols() != 2 * n)
    throw Error(ErrorCode::DimMismatch, "Wigner table must be 2N×2N");
}

WignerTable WignerTable::zero(int n) { return WignerTable(n, RealMatrix::Zero(2 * n, 2 * n)); }

double WignerTable::at(long long q, long long p) const {
  return values_(mod(q, 2LL * n_), mod(p, 2LL * n_));
}

namespace {

void require_ket(int q, int n) {
  if (q < 0 || q >= n) {
    std::ostringstream msg;
    msg << "basis index " << q << " outside [0, " << n - 1 << "]";
    throw Error(ErrorCode::IndexOutOfRange, msg.str());
  }
}

Complex trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  Complex acc{0.0, 0.0};
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index k = 0; k < x.cols(); ++k) acc += x(i, k) * y(k, i);
  return acc;
}

constexpr double kImagLimit = 1e-10;

void check_real(const Complex& value, const char* where) {
  if (std::abs(value.imag()) > kImagLimit) {
    std::ostringstream msg;
    msg << where << ": imaginary residue " << value.imag();
    throw Error(ErrorCode::NonHermitianResult, msg.str());
  }
}

}  // namespace

ComplexVector state_vector(const StateSpec& spec, int n) {
  if (const auto* ket = std::get_if<BasisKet>(&spec)) {
    require_ket(ket->q0, n);
    ComplexVector psi = ComplexVector::Zero(n);
    psi(ket->q0) = 1.0;
    return psi;
  }
  if (const auto* sup = std::get_if<Superposition>(&spec)) {
    require_ket(sup->q0, n);
    require_ket(sup->q1, n);
    if (sup->q0 == sup->q1) throw Error(ErrorCode::DegenerateSuperposition, "q0 and q1 must differ");
    ComplexVector psi = ComplexVector::Zero(n);
    psi(sup->q0) = 1.0 / std::sqrt(2.0);
    psi(sup->q1) = std::polar(1.0 / std::sqrt(2.0), -sup->phi);
    return psi;
  }
  throw Error(ErrorCode::InvalidArgument, "a density spec has no state vector");
}

DensityOperator density_from_spec(const StateSpec& spec, int n) {
  if (const auto* d = std::get_if<DensitySpec>(&spec)) {
    if (d->matrix.rows() != n) throw Error(ErrorCode::DimMismatch, "density file dimension differs from N");
    return DensityOperator(d->matrix);
  }
  return DensityOperator::pure(state_vector(spec, n));
}

WignerTable wigner_table(const DensityOperator& rho, const PointOperatorGrid& ops) {
  const int n = rho.dim();
  require_even(n);
  if (ops.n() != n) throw Error(ErrorCode::DimMismatch, "operator grid built for another N");
  RealMatrix values(2 * n, 2 * n);
  for (int q = 0; q < 2 * n; ++q) {
    for (int p = 0; p < 2 * n; ++p) {
      const Complex w = trace_of_product(ops.at(q, p), rho.matrix());
      check_real(w, "tr(A rho)");
      values(q, p) = w.real();
    }
  }
  return WignerTable(n, std::move(values));
}

WignerTable wigner_table(const DensityOperator& rho) {
  require_even(rho.dim());
  return wigner_table(rho, PointOperatorGrid(rho.dim()));
}

WignerTable wigner_table_sum_form(const ComplexMatrix& rho) {
  const int n = static_cast<int>(rho.rows());
  require_even(n);
  if (rho.cols() != n) throw Error(ErrorCode::DimMismatch, "rho must be square");
  RealMatrix values(2 * n, 2 * n);
  for (int q = 0; q < 2 * n; ++q) {
    for (int p = 0; p < 2 * n; ++p) {
      Complex acc{0.0, 0.0};
      for (int m = 0; m < n; ++m)
        acc += rho(mod(q - m, n), m) * pi_phase(static_cast<long long>(p) * (2 * m - q), n);
      acc /= 2.0 * n;
      check_real(acc, "sum form");
      values(q, p) = acc.real();
    }
  }
  return WignerTable(n, std::move(values));
}

WignerTable wigner_pure_position(int q0, int n) {
  require_even(n);
  require_ket(q0, n);
  RealMatrix values = RealMatrix::Zero(2 * n, 2 * n);
  const double level = 1.0 / (2.0 * n);
  for (int q = 0; q < 2 * n; ++q) {
    const int offset = q - 2 * q0;
    if (mod(offset, n) != 0) continue;
    const int fold = offset / n;  // −2 … 1; only its parity matters
    for (int p = 0; p < 2 * n; ++p) values(q, p) = (mod(static_cast<long long>(p) * fold, 2) == 0) ? level : -level;
  }
  return WignerTable(n, std::move(values));
}

WignerTable wigner_superposition(int q0, int q1, double phi, int n) {
  require_even(n);
  require_ket(q0, n);
  require_ket(q1, n);
  if (q0 == q1) throw Error(ErrorCode::DegenerateSuperposition, "q0 and q1 must differ");
  const RealMatrix w0 = wigner_pure_position(q0, n).values();
  const RealMatrix w1 = wigner_pure_position(q1, n).values();
  RealMatrix values(2 * n, 2 * n);
  for (int q = 0; q < 2 * n; ++q) {
    const int qt = q0 + q1 - q;
    for (int p = 0; p < 2 * n; ++p) {
      double interference = 0.0;
      if (mod(qt, n) == 0) {
        const double sign = mod(static_cast<long long>(p) * (qt / n), 2) == 0 ? 1.0 : -1.0;
        interference = sign * std::cos(std::numbers::pi * p * (q1 - q0) / n + phi) / n;
      }
      values(q, p) = 0.5 * (w0(q, p) + w1(q, p) + interference);
    }
  }
  return WignerTable(n, std::move(values));
}

double superposition_cross_term(Complex a, Complex b, const PhasePoint& alpha, int ket0, int ket1) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > tol::kExact)
    throw Error(ErrorCode::NotNormalized, "|a|^2 + |b|^2 must equal 1");
  require_ket(ket0, alpha.n);
  require_ket(ket1, alpha.n);
  if (ket0 == ket1) throw Error(ErrorCode::DegenerateSuperposition, "kets must differ");
  const ComplexMatrix A = point_operator(alpha).matrix;
  return 2.0 * (a * std::conj(b) * A(ket1, ket0)).real();
}

ComplexMatrix reconstruct_operator(const WignerTable& table, ReconstructionSum sum) {
  const int n = table.n();
  const PointOperatorGrid ops(n);
  const bool core = sum == ReconstructionSum::Core;
  const int side = core ? n : 2 * n;
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (int q = 0; q < side; ++q)
    for (int p = 0; p < side; ++p) rho += table.at(q, p) * ops.at(q, p);
  return rho * static_cast<double>(core ? 4 * n : n);
}

DensityOperator reconstruct(const WignerTable& table) {
  const double residual = symmetry_residual(table);
  if (residual > tol::kConsistency) {
    std::ostringstream msg;
    msg << "symmetry residual " << residual << " exceeds 1e-8";
    throw Error(ErrorCode::InconsistentTable, msg.str());
  }
  return DensityOperator(reconstruct_operator(table), tol::kEigen);
}

double symmetry_residual(const WignerTable& table) {
  const int n = table.n();
  double worst = 0.0;
  for (int q = 0; q < n; ++q) {
    for (int p = 0; p < n; ++p) {
      for (int sq = 0; sq <= 1; ++sq) {
        for (int sp = 0; sp <= 1; ++sp) {
          const long long exponent = static_cast<long long>(sp) * q + sq * p + sq * sp * n;
          const double sign = mod(exponent, 2) == 0 ? 1.0 : -1.0;
          worst = std::max(worst, std::abs(table.at(q + sq * n, p + sp * n) - sign * table.at(q, p)));
        }
      }
    }
  }
  return worst;
}

RealMatrix restrict_to_core(const WignerTable& table) {
  return table.values().topLeftCorner(table.n(), table.n());
}

WignerTable extend_by_symmetry(const RealMatrix& core) {
  const int n = static_cast<int>(core.rows());
  require_even(n);
  if (core.cols() != n) throw Error(ErrorCode::DimMismatch, "core table must be N×N");
  RealMatrix values(2 * n, 2 * n);
  for (int q = 0; q < n; ++q) {
    for (int p = 0; p < n; ++p) {
      for (int sq = 0; sq <= 1; ++sq) {
        for (int sp = 0; sp <= 1; ++sp) {
          const long long exponent = static_cast<long long>(sp) * q + sq * p + sq * sp * n;
          values(q + sq * n, p + sp * n) = (mod(exponent, 2) == 0 ? 1.0 : -1.0) * core(q, p);
        }
      }
    }
  }
  return WignerTable(n, std::move(values));
}

std::vector<double> marginal_position(const WignerTable& table) {
  std::vector<double> out(table.n());
  for (int q = 0; q < table.n(); ++q) out[q] = table.values().row(2 * q).sum();
  return out;
}

std::vector<double> marginal_momentum(const WignerTable& table) {
  std::vector<double> out(table.n());
  for (int p = 0; p < table.n(); ++p) out[p] = table.values().col(2 * p).sum();
  return out;
}

std::vector<double> odd_position_sums(const WignerTable& table) {
  std::vector<double> out(table.n());
  for (int q = 0; q < table.n(); ++q) out[q] = table.values().row(2 * q + 1).sum();
  return out;
}

std::vector<double> odd_momentum_sums(const WignerTable& table) {
  std::vector<double> out(table.n());
  for (int p = 0; p < table.n(); ++p) out[p] = table.values().col(2 * p + 1).sum();
  return out;
}

std::vector<double> w_transform(const StateSpec& psi, int n) {
  require_even(n);
  const WignerTable table = wigner_table(DensityOperator::pure(state_vector(psi, n)));
  std::vector<double> phi(2 * n);
  for (int p = 0; p < 2 * n; ++p) phi[p] = table.values().col(mod(2 * p, 2 * n)).sum();
  return phi;
}

double overlap(const WignerTable& a, const WignerTable& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::DimMismatch, "tables of different N");
  return a.n() * a.values().cwiseProduct(b.values()).sum();
}

double purity_prefactor(int n) { return 16.0 * n * n; }

double purity_residual(const WignerTable& table) {
  const int n = table.n();
  const PointOperatorGrid ops(n);
  const auto core = grid_points(n, GridKind::Core);
  const double c = purity_prefactor(n);
  double worst = 0.0;
  for (const auto& alpha : grid_points(n, GridKind::Full)) {
    Complex acc{0.0, 0.0};
    for (const auto& beta : core) {
      const double wb = table.at(beta);
      if (wb == 0.0) continue;
      const ComplexMatrix ab = ops.at(alpha) * ops.at(beta);
      for (const auto& gamma : core) {
        // Γ(α,β,γ) = tr(Â(α)Â(β)Â(γ))
        acc += trace_of_product(ab, ops.at(gamma)) * (wb * table.at(gamma));
      }
    }
    worst = std::max(worst, std::abs(table.at(alpha) - c * acc.real()));
  }
  return worst;
}

}  // namespace dwigner
