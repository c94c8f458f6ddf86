#include "dwigner/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dwigner {

namespace {

void require_dim(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
}

}  // namespace

Complex pi_phase(long long k, int n) {
  const long long r = mod(k, 2LL * n);
  if (r == 0) return {1.0, 0.0};
  if (2 * r == 2LL * n) return {-1.0, 0.0};
  return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / n);
}

PhasePoint::PhasePoint(long long q_, long long p_, int n_)
    : q(static_cast<int>(mod(q_, 2LL * n_))), p(static_cast<int>(mod(p_, 2LL * n_))), n(n_) {
  require_dim(n_);
}

std::vector<PhasePoint> grid_points(int n, GridKind kind) {
  require_dim(n);
  const int side = kind == GridKind::Core ? n : 2 * n;
  std::vector<PhasePoint> out;
  out.reserve(static_cast<std::size_t>(side) * side);
  for (int q = 0; q < side; ++q)
    for (int p = 0; p < side; ++p) out.emplace_back(q, p, n);
  return out;
}

UnitaryMatrix position_shift(int n) {
  require_dim(n);
  ComplexMatrix U = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) U((j + 1) % n, j) = 1.0;
  return UnitaryMatrix(std::move(U));
}

UnitaryMatrix momentum_shift(int n) {
  require_dim(n);
  ComplexMatrix V = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) V(j, j) = pi_phase(2LL * j, n);
  return UnitaryMatrix(std::move(V));
}

UnitaryMatrix fourier_matrix(int n) {
  require_dim(n);
  ComplexMatrix F(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) F(j, k) = scale * pi_phase(2LL * j * k, n);
  return UnitaryMatrix(std::move(F));
}

UnitaryMatrix reflection_operator(int n) {
  require_dim(n);
  ComplexMatrix R = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) R(mod(-j, n), j) = 1.0;
  return UnitaryMatrix(std::move(R));
}

UnitaryMatrix translation_operator(long long q, long long p, int n) {
  require_dim(n);
  // Û^q V̂^p |m⟩ = e^{2πipm/N} |m+q⟩; with the e^{iπqp/N} prefactor the total
  // exponent is the integer qp + 2pm in units of π/N.
  const long long qq = mod(q, 2LL * n);
  const long long pp = mod(p, 2LL * n);
  ComplexMatrix T = ComplexMatrix::Zero(n, n);
  for (int m = 0; m < n; ++m) T(mod(m + qq, n), m) = pi_phase(qq * pp + 2 * pp * m, n);
  return UnitaryMatrix(std::move(T));
}

PhasePointOperator point_operator(const PhasePoint& alpha) {
  const int n = alpha.n;
  ComplexMatrix A = ComplexMatrix::Zero(n, n);
  const double scale = 1.0 / (2.0 * n);
  for (int m = 0; m < n; ++m) {
    const long long exponent = static_cast<long long>(alpha.p) * (alpha.q - 2LL * m);
    A(mod(alpha.q - m, n), m) = scale * pi_phase(exponent, n);
  }
  return {alpha, std::move(A)};
}

PointOperatorGrid::PointOperatorGrid(int n) : n_(n) {
  require_dim(n);
  const auto points = grid_points(n, GridKind::Full);
  ops_.reserve(points.size());
  for (const auto& a : points) ops_.push_back(point_operator(a).matrix);
}

Complex gamma_kernel(const PhasePoint& a, const PhasePoint& b, const PhasePoint& c) {
  if (a.n != b.n || b.n != c.n) throw Error(ErrorCode::DimMismatch, "points belong to different lattices");
  return trace_product({point_operator(a).matrix, point_operator(b).matrix, point_operator(c).matrix});
}

PhaseLine::PhaseLine(long long n1, long long n2, long long n3, int n)
    : n1_(static_cast<int>(mod(n1, 2LL * n))),
      n2_(static_cast<int>(mod(n2, 2LL * n))),
      n3_(static_cast<int>(mod(n3, 2LL * n))),
      n_(n) {
  require_dim(n);
  if (n1_ == 0 && n2_ == 0) throw Error(ErrorCode::InvalidArgument, "line direction (n1, n2) must be nonzero");
}

PhaseLine PhaseLine::constant_q(long long c, int n) { return PhaseLine(0, 1, -c, n); }

PhaseLine PhaseLine::constant_p(long long c, int n) { return PhaseLine(1, 0, c, n); }

bool PhaseLine::contains(long long q, long long p) const {
  return mod(static_cast<long long>(n1_) * p - static_cast<long long>(n2_) * q - n3_, 2LL * n_) == 0;
}

std::vector<PhasePoint> line_points(const PhaseLine& line) {
  std::vector<PhasePoint> out;
  for (const auto& a : grid_points(line.n(), GridKind::Full))
    if (line.contains(a.q, a.p)) out.push_back(a);
  if (out.empty()) {
    std::ostringstream msg;
    msg << "L(" << line.n1() << "," << line.n2() << "," << line.n3() << ") has no lattice points";
    throw Error(ErrorCode::EmptyLine, msg.str());
  }
  return out;
}

ComplexMatrix line_projector(const PhaseLine& line) {
  ComplexMatrix sum = ComplexMatrix::Zero(line.n(), line.n());
  for (const auto& a : line_points(line)) sum += point_operator(a).matrix;
  return sum;
}

ComplexMatrix line_projector_spectral(const PhaseLine& line) {
  const int n = line.n();
  const ComplexMatrix T = translation_operator(line.n1(), line.n2(), n).matrix();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  ComplexMatrix power = ComplexMatrix::Identity(n, n);
  for (int lambda = 0; lambda < 2 * n; ++lambda) {
    sum += pi_phase(static_cast<long long>(line.n3()) * lambda, n) * power;
    power = power * T;
  }
  return sum / (2.0 * n);
}

}  // namespace dwigner
