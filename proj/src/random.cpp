#include "dwigner/random.hpp"

#include <cmath>

namespace dwigner::random {

ComplexMatrix gaussian_matrix(int rows, int cols, Engine& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

DensityOperator random_density(int n, Engine& rng) {
  const ComplexMatrix g = gaussian_matrix(n, n, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityOperator(std::move(rho));
}

DensityOperator random_pure(int n, Engine& rng) {
  ComplexVector psi = gaussian_matrix(n, 1, rng).col(0);
  psi.normalize();
  ComplexMatrix rho = psi * psi.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(0.5 * (rho + rho.adjoint()));
}

UnitaryMatrix random_unitary(int n, Engine& rng) {
  const ComplexMatrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return UnitaryMatrix(std::move(q));
}

KrausChannel random_channel(int n, int terms, Engine& rng) {
  std::vector<ComplexMatrix> b;
  ComplexMatrix gram = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < terms; ++i) {
    b.push_back(gaussian_matrix(n, n, rng));
    gram += b.back().adjoint() * b.back();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (gram + gram.adjoint()));
  const ComplexMatrix inv_sqrt = solver.operatorInverseSqrt();
  for (auto& v : b) v = v * inv_sqrt;
  return KrausChannel(std::move(b), tol::kEigen);
}

RealMatrix random_stochastic(int n, Engine& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  RealMatrix p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = uniform(rng);
  for (int j = 0; j < n; ++j) p.col(j) /= p.col(j).sum();
  return p;
}

}  // namespace dwigner::random
