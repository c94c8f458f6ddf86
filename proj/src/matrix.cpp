#include "dwigner/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace dwigner {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotDensity: return "NotDensity";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::NonHermitianResult: return "NonHermitianResult";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegenerateSuperposition: return "DegenerateSuperposition";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InconsistentTable: return "InconsistentTable";
    case ErrorCode::InvalidChannel: return "InvalidChannel";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyLine: return "EmptyLine";
  }
  return "Unknown";
}

double max_abs(const ComplexMatrix& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

double max_abs(const RealMatrix& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& A, double tolerance) {
  return A.rows() == A.cols() && max_abs(ComplexMatrix(A - A.adjoint())) <= tolerance;
}

double unitarity_residual(const ComplexMatrix& U) {
  const auto n = U.rows();
  return max_abs(ComplexMatrix(U.adjoint() * U - ComplexMatrix::Identity(n, n)));
}

bool is_unitary(const ComplexMatrix& A, double tolerance) {
  return A.rows() == A.cols() && unitarity_residual(A) <= tolerance;
}

long long mod(long long a, long long n) {
  const long long r = a % n;
  return r < 0 ? r + n : r;
}

double periodic_delta(long long q, long long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "periodic_delta needs n >= 1");
  return mod(q, n) == 0 ? 1.0 : 0.0;
}

ComplexMatrix unitary_power(const ComplexMatrix& A, long long k) {
  const ComplexMatrix base = k < 0 ? ComplexMatrix(A.adjoint()) : A;
  ComplexMatrix out = ComplexMatrix::Identity(A.rows(), A.cols());
  for (long long i = 0; i < std::llabs(k); ++i) out = out * base;
  return out;
}

Complex trace_product(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "trace_product of no factors");
  const auto n = factors.front().rows();
  for (const auto& f : factors) {
    if (f.rows() != n || f.cols() != n)
      throw Error(ErrorCode::DimMismatch, "trace_product needs equal square factors");
  }
  ComplexMatrix head = ComplexMatrix::Identity(n, n);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) head = head * factors[i];
  const ComplexMatrix& last = factors.back();
  // tr(H L) = Σ_i Σ_k H(i,k) L(k,i), accumulated row by row.
  Complex acc{0.0, 0.0};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) acc += head(i, k) * last(k, i);
  return acc;
}

Complex trace_product(std::initializer_list<ComplexMatrix> factors) {
  return trace_product(std::span<const ComplexMatrix>(factors.begin(), factors.size()));
}

ComplexMatrix HermitianEigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

namespace {

// Index of the largest-magnitude component; ties go to the lowest index.
Eigen::Index leading_index(const ComplexVector& v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best_abs + 1e-12) {
      best_abs = a;
      best = i;
    }
  }
  return best;
}

ComplexVector fix_phase(const ComplexVector& v) {
  const Complex lead = v(leading_index(v));
  return v * (std::abs(lead) / lead);
}

}  // namespace

HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& A) {
  if (A.rows() != A.cols()) throw Error(ErrorCode::DimMismatch, "hermitian_eig needs a square matrix");
  if (!is_hermitian(A, tol::kEigen)) throw Error(ErrorCode::NotHermitian, "input fails the symmetry check");

  const ComplexMatrix sym = 0.5 * (A + A.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const RealVector& values = solver.eigenvalues();
  const ComplexMatrix& vectors = solver.eigenvectors();
  const Eigen::Index n = A.rows();

  HermitianEigenDecomposition out{values, ComplexMatrix(n, n)};
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && values(stop) - values(stop - 1) <= tol::kEigen) ++stop;
    const Eigen::Index width = stop - start;

    std::vector<ComplexVector> basis;
    if (width == 1) {
      basis.push_back(fix_phase(vectors.col(start)));
    } else {
      const ComplexMatrix block = vectors.middleCols(start, width);
      const ComplexMatrix projector = block * block.adjoint();
      for (Eigen::Index e = 0; e < n && static_cast<Eigen::Index>(basis.size()) < width; ++e) {
        ComplexVector v = projector.col(e);
        for (const auto& b : basis) v -= b * b.dot(v);
        const double norm = v.norm();
        if (norm > 1e-6) basis.push_back(fix_phase(v / norm));
      }
      std::stable_sort(basis.begin(), basis.end(), [](const ComplexVector& a, const ComplexVector& b) {
        return leading_index(a) < leading_index(b);
      });
    }
    for (Eigen::Index j = 0; j < width; ++j) out.eigenvectors.col(start + j) = basis[j];
    start = stop;
  }
  return out;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& A) {
  const auto eig = hermitian_eig(A);
  ComplexVector roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < roots.size(); ++i) roots(i) = std::sqrt(Complex(eig.eigenvalues(i), 0.0));
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix U, double tolerance) : matrix_(std::move(U)) {
  if (matrix_.rows() != matrix_.cols()) throw Error(ErrorCode::DimMismatch, "unitary must be square");
  const double residual = unitarity_residual(matrix_);
  if (!(residual <= tolerance)) {
    std::ostringstream msg;
    msg << "|U*U - I|_max = " << residual;
    throw Error(ErrorCode::NotUnitary, msg.str());
  }
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
  return UnitaryMatrix(ComplexMatrix::Identity(n, n));
}

DensityOperator::DensityOperator(ComplexMatrix rho, double tolerance) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1)
    throw Error(ErrorCode::DimMismatch, "density operator must be square and non-empty");
  if (!rho_.allFinite()) throw Error(ErrorCode::NotDensity, "non-finite entries");
  const double herm = max_abs(ComplexMatrix(rho_ - rho_.adjoint()));
  if (herm > tolerance) {
    std::ostringstream msg;
    msg << "not Hermitian, residual " << herm;
    throw Error(ErrorCode::NotDensity, msg.str());
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tolerance) {
    std::ostringstream msg;
    msg << "trace " << tr.real() << " differs from 1";
    throw Error(ErrorCode::NotDensity, msg.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues()(0) < -tol::kPsd) {
    std::ostringstream msg;
    msg << "not positive semidefinite, smallest eigenvalue " << solver.eigenvalues()(0);
    throw Error(ErrorCode::NotDensity, msg.str());
  }
}

DensityOperator DensityOperator::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > tol::kExact) throw Error(ErrorCode::NotNormalized, "state vector must have unit norm");
  return DensityOperator(psi * psi.adjoint());
}

DensityOperator DensityOperator::basis(int n, int k) {
  if (k < 0 || k >= n) throw Error(ErrorCode::IndexOutOfRange, "basis index outside [0, N-1]");
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  rho(k, k) = 1.0;
  return DensityOperator(rho);
}

DensityOperator DensityOperator::maximally_mixed(int n) {
  return DensityOperator(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

}  // namespace dwigner
