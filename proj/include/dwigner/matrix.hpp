#pragma once

// Dense complex matrices, validated state/unitary wrappers and the small
// numerical kernels shared by every other module.

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

#include "dwigner/errors.hpp"

namespace dwigner {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kExact = 1e-12;      // algebraic identities at desk-scale N
inline constexpr double kEigen = 1e-10;      // eigendecomposition-mediated identities
inline constexpr double kPsd = 1e-10;        // smallest admissible eigenvalue is -kPsd
inline constexpr double kConsistency = 1e-8; // loaded tables / channels
}  // namespace tol

/// Largest absolute entry of A (the max-norm used by every tolerance check).
double max_abs(const ComplexMatrix& A);
double max_abs(const RealMatrix& A);

bool is_hermitian(const ComplexMatrix& A, double tolerance = tol::kExact);
bool is_unitary(const ComplexMatrix& A, double tolerance = tol::kExact);

/// Residual ‖U*U − I‖_max.
double unitarity_residual(const ComplexMatrix& U);

/// 1 if q ≡ 0 (mod n), otherwise 0.
double periodic_delta(long long q, long long n);

/// Non-negative residue of a mod n.
long long mod(long long a, long long n);

/// A^k by repeated multiplication; negative k uses the adjoint, so A must be
/// unitary in that case.
ComplexMatrix unitary_power(const ComplexMatrix& A, long long k);

/// Trace of the left-to-right product of the arguments.
Complex trace_product(std::span<const ComplexMatrix> factors);
Complex trace_product(std::initializer_list<ComplexMatrix> factors);

struct HermitianEigenDecomposition {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // orthonormal columns

  ComplexMatrix reconstruct() const;
};

/// Eigendecomposition of a Hermitian matrix with a platform-stable basis.
///
/// Eigenvalues closer than 1e-10 form a degenerate cluster. Within a cluster
/// the basis is rebuilt by Gram-Schmidt on the projected standard basis
/// vectors, so it only depends on the eigenspace. Each vector is then phased
/// so that its largest-magnitude component (lowest index on ties) is real and
/// positive, and vectors of a cluster are ordered by that component's index.
HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& A);

/// f(A) = U f(D) U* applied to the spectrum of a Hermitian matrix, with the
/// principal complex square root.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& A);

class UnitaryMatrix {
 public:
  /// Throws NotUnitary when ‖U*U − I‖_max exceeds the tolerance.
  explicit UnitaryMatrix(ComplexMatrix U, double tolerance = tol::kExact);

  static UnitaryMatrix identity(int n);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  ComplexMatrix adjoint() const { return matrix_.adjoint(); }

 private:
  ComplexMatrix matrix_;
};

class DensityOperator {
 public:
  /// Validates Hermiticity (1e-12), unit trace (1e-12) and positivity
  /// (smallest eigenvalue ≥ −1e-10). Throws NotDensity / DimMismatch.
  explicit DensityOperator(ComplexMatrix rho, double tolerance = tol::kExact);

  static DensityOperator pure(const ComplexVector& psi);
  static DensityOperator basis(int n, int k);
  static DensityOperator maximally_mixed(int n);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const ComplexMatrix& matrix() const { return rho_; }

 private:
  ComplexMatrix rho_;
};

}  // namespace dwigner
