#include "dwigner/channels.hpp"

#include <cmath>
#include <sstream>

namespace dwigner {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, double tolerance) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorCode::InvalidChannel, "a channel needs at least one Kraus operator");
  n_ = static_cast<int>(kraus_.front().rows());
  for (const auto& v : kraus_) {
    if (v.rows() != n_ || v.cols() != n_) throw Error(ErrorCode::DimMismatch, "Kraus operators must share one N×N shape");
    if (!v.allFinite()) throw Error(ErrorCode::InvalidChannel, "non-finite Kraus entry");
  }
  const double residual = trace_preservation_residual();
  if (!(residual <= tolerance)) {
    std::ostringstream msg;
    msg << "trace-preservation residual |sum V*V - I|_max = " << residual;
    throw Error(ErrorCode::InvalidChannel, msg.str());
  }
}

KrausChannel KrausChannel::identity(int n) {
  return KrausChannel({ComplexMatrix::Identity(n, n)});
}

KrausChannel KrausChannel::stochastic(const RealMatrix& p) {
  const auto n = p.rows();
  if (p.cols() != n) throw Error(ErrorCode::DimMismatch, "stochastic matrix must be square");
  if ((p.array() < 0.0).any()) throw Error(ErrorCode::InvalidChannel, "negative transition probability");
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      ComplexMatrix v = ComplexMatrix::Zero(n, n);
      v(i, j) = std::sqrt(p(i, j));
      kraus.push_back(std::move(v));
    }
  }
  return KrausChannel(std::move(kraus));
}

double KrausChannel::trace_preservation_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(n_, n_);
  for (const auto& v : kraus_) sum += v.adjoint() * v;
  return max_abs(ComplexMatrix(sum - ComplexMatrix::Identity(n_, n_)));
}

namespace {

void require_matching(const KrausChannel& channel, int n) {
  if (channel.dim() != n) throw Error(ErrorCode::DimMismatch, "channel and state dimensions differ");
}

}  // namespace

DensityOperator apply_channel(const KrausChannel& channel, const DensityOperator& rho) {
  require_matching(channel, rho.dim());
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& v : channel.kraus()) out += v * rho.matrix() * v.adjoint();
  return DensityOperator(std::move(out), tol::kEigen);
}

WignerTable channel_wigner(const KrausChannel& channel, const DensityOperator& rho) {
  require_matching(channel, rho.dim());
  const int n = rho.dim();
  require_even(n);
  RealMatrix values = RealMatrix::Zero(2 * n, 2 * n);
  for (const auto& v : channel.kraus()) {
    const ComplexMatrix term = v * rho.matrix() * v.adjoint();
    values += wigner_table_sum_form(term).values();
  }
  return WignerTable(n, std::move(values));
}

PhasePropagator::PhasePropagator(int n, RealMatrix z) : n_(n), z_(std::move(z)) {
  require_even(n);
  if (z_.rows() != 4 * n * n || z_.cols() != 4 * n * n) throw Error(ErrorCode::DimMismatch, "Z must be 4N²×4N²");
}

WignerTable PhasePropagator::apply(const WignerTable& table, int steps) const {
  if (table.n() != n_) throw Error(ErrorCode::DimMismatch, "table and propagator dimensions differ");
  if (steps < 0) throw Error(ErrorCode::InvalidArgument, "steps must be non-negative");
  const int side = 2 * n_;
  // Row-major flattening matches flat_index().
  RealVector w(side * side);
  for (int q = 0; q < side; ++q)
    for (int p = 0; p < side; ++p) w(q * side + p) = table.values()(q, p);
  for (int s = 0; s < steps; ++s) w = z_ * w;
  RealMatrix out(side, side);
  for (int q = 0; q < side; ++q)
    for (int p = 0; p < side; ++p) out(q, p) = w(q * side + p);
  return WignerTable(n_, std::move(out));
}

PhasePropagator unitary_propagator(const UnitaryMatrix& u) {
  const int n = u.dim();
  require_even(n);
  if (n > kMaxPropagatorDim) throw Error(ErrorCode::InvalidArgument, "dense propagator limited to N <= 16");
  const PointOperatorGrid ops(n);
  const auto points = grid_points(n, GridKind::Full);
  const ComplexMatrix& U = u.matrix();
  const ComplexMatrix Ua = u.adjoint();

  std::vector<ComplexMatrix> moved;
  moved.reserve(points.size());
  for (const auto& b : points) moved.push_back(U * ops.at(b) * Ua);

  const auto count = static_cast<Eigen::Index>(points.size());
  RealMatrix z(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const ComplexMatrix& a = ops.at(points[i]);
    for (Eigen::Index j = 0; j < count; ++j) {
      const Complex t = static_cast<double>(n) * a.cwiseProduct(moved[j].transpose()).sum();
      if (std::abs(t.imag()) > tol::kExact) throw Error(ErrorCode::NonHermitianResult, "complex propagator entry");
      z(i, j) = t.real();
    }
  }
  return PhasePropagator(n, std::move(z));
}

Complex propagated_gamma(const PhasePropagator& z, const PointOperatorGrid& ops, const PhasePoint& a,
                         const PhasePoint& b, const PhasePoint& c) {
  const int n = z.n();
  if (ops.n() != n) throw Error(ErrorCode::DimMismatch, "operator grid built for another N");
  const auto points = grid_points(n, GridKind::Full);
  // Contract one index at a time: X_a = Σ_α Z_{a'α} Â(α), and likewise for b, c.
  auto contract = [&](const PhasePoint& out) {
    ComplexMatrix x = ComplexMatrix::Zero(n, n);
    for (const auto& alpha : points) x += z.entry(out, alpha) * ops.at(alpha);
    return x;
  };
  const ComplexMatrix xa = contract(a);
  const ComplexMatrix xb = contract(b);
  const ComplexMatrix xc = contract(c);
  return trace_product({xa, xb, xc});
}

KrausChannel fourier_conjugate_channel(const KrausChannel& channel, const UnitaryMatrix& f) {
  if (f.dim() != channel.dim()) throw Error(ErrorCode::DimMismatch, "F and channel dimensions differ");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(channel.kraus().size());
  for (const auto& v : channel.kraus()) kraus.push_back(f.matrix() * v * f.adjoint());
  return KrausChannel(std::move(kraus));
}

ComplexMatrix conjugate(const UnitaryMatrix& f, const ComplexMatrix& rho) {
  return f.matrix() * rho * f.adjoint();
}

Complex FanoSqrtDecomposition::cyclic_form(const KrausChannel& channel, const DensityOperator& rho) const {
  Complex acc{0.0, 0.0};
  for (const auto& v : channel.kraus())
    acc += trace_product({sqrt_factor, v, rho.matrix(), ComplexMatrix(v.adjoint()), sqrt_factor});
  return acc;
}

Complex FanoSqrtDecomposition::adjoint_form(const DensityOperator& rho) const {
  Complex acc{0.0, 0.0};
  for (const auto& mi : m) acc += trace_product({mi, rho.matrix(), ComplexMatrix(mi.adjoint())});
  return acc;
}

FanoSqrtDecomposition fano_sqrt_decomposition(const KrausChannel& channel, const PhasePoint& alpha) {
  if (channel.dim() != alpha.n) throw Error(ErrorCode::DimMismatch, "channel and lattice dimensions differ");
  const ComplexMatrix A = point_operator(alpha).matrix;
  const auto eig = hermitian_eig(A);
  ComplexVector roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < roots.size(); ++i) roots(i) = std::sqrt(Complex(eig.eigenvalues(i), 0.0));
  ComplexMatrix s = eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();

  FanoSqrtDecomposition out{alpha, s, {}, eig.eigenvalues.minCoeff() >= -tol::kExact};
  for (const auto& v : channel.kraus()) out.m.push_back(s * v);
  return out;
}

}  // namespace dwigner
