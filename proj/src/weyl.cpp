#include "dwigner/weyl.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace dwigner::weyl {

void WeylConfig::validate() const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
  if (!(alpha_u >= 0.0 && alpha_u <= 1.0) || !(alpha_v >= 0.0 && alpha_v <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "alpha_u and alpha_v must lie in [0, 1]");
}

GridIndex::GridIndex(long long a, long long b, int n)
    : n1(static_cast<int>(mod(a, n))), n2(static_cast<int>(mod(b, n))) {}

long long symplectic_form(long long n1, long long n2, long long m1, long long m2) {
  return n1 * m2 - n2 * m1;
}

UnitaryMatrix clock_operator(const WeylConfig& cfg) {
  cfg.validate();
  const double w = 2.0 * std::numbers::pi / cfg.n;
  ComplexMatrix U = ComplexMatrix::Zero(cfg.n, cfg.n);
  for (int k = 0; k < cfg.n; ++k) U(k, k) = std::polar(1.0, w * (cfg.alpha_u + k));
  return UnitaryMatrix(std::move(U));
}

UnitaryMatrix shift_operator(const WeylConfig& cfg) {
  cfg.validate();
  const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * cfg.alpha_v / cfg.n);
  ComplexMatrix V = ComplexMatrix::Zero(cfg.n, cfg.n);
  for (int l = 0; l < cfg.n; ++l) V((l + 1) % cfg.n, l) = phase;
  return UnitaryMatrix(std::move(V));
}

UnitaryMatrix weyl_operator(const WeylConfig& cfg, long long n1, long long n2) {
  const ComplexMatrix U = clock_operator(cfg).matrix();
  const ComplexMatrix V = shift_operator(cfg).matrix();
  // e^{−iπ n1 n2 / N}: the exponent is an integer multiple of π/N, reduced mod 2N.
  const long long k = mod(-n1 * n2, 2LL * cfg.n);
  const Complex phase = std::polar(1.0, std::numbers::pi * static_cast<double>(k) / cfg.n);
  return UnitaryMatrix(phase * unitary_power(U, n1) * unitary_power(V, n2));
}

UnitaryMatrix weyl_operator(const WeylConfig& cfg, const GridIndex& n) {
  return weyl_operator(cfg, n.n1, n.n2);
}

ComplexMatrix weyl_expand(const WeylConfig& cfg, const ComplexMatrix& A) {
  cfg.validate();
  if (A.rows() != cfg.n || A.cols() != cfg.n)
    throw Error(ErrorCode::DimMismatch, "weyl_expand needs an N×N matrix");
  ComplexMatrix c(cfg.n, cfg.n);
  for (int n1 = 0; n1 < cfg.n; ++n1) {
    for (int n2 = 0; n2 < cfg.n; ++n2) {
      const ComplexMatrix W = weyl_operator(cfg, n1, n2).adjoint();
      c(n1, n2) = trace_product({W, A}) / static_cast<double>(cfg.n);
    }
  }
  return c;
}

ComplexMatrix weyl_resynthesize(const WeylConfig& cfg, const ComplexMatrix& coefficients) {
  cfg.validate();
  if (coefficients.rows() != cfg.n || coefficients.cols() != cfg.n)
    throw Error(ErrorCode::DimMismatch, "coefficient table must be N×N");
  ComplexMatrix A = ComplexMatrix::Zero(cfg.n, cfg.n);
  for (int n1 = 0; n1 < cfg.n; ++n1)
    for (int n2 = 0; n2 < cfg.n; ++n2) A += coefficients(n1, n2) * weyl_operator(cfg, n1, n2).matrix();
  return A;
}

}  // namespace dwigner::weyl
