#include <gtest/gtest.h>

#include <vector>

#include "dwigner/errors.hpp"
#include "dwigner/phase_space.hpp"
#include "oracles.hpp"

namespace dwigner {
namespace {

using testing::fourier_sum_point_operator;
using testing::kPi;
using testing::symmetry_sign;

double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(ComplexMatrix(a - b)); }

ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

TEST(Shifts, Examples) {
  EXPECT_LE(dist(position_shift(2).matrix(), m2(0, 1, 1, 0)), 1e-12);
  EXPECT_LE(dist(momentum_shift(2).matrix(), m2(1, 0, 0, -1)), 1e-12);
  const ComplexMatrix u = position_shift(3).matrix();
  const ComplexMatrix v = momentum_shift(3).matrix();
  EXPECT_LE(dist(v * u, std::polar(1.0, 2.0 * kPi / 3.0) * u * v), 1e-12);
}

TEST(FourierMatrix, Examples) {
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_LE(dist(fourier_matrix(2).matrix(), m2(r, r, r, -r)), 1e-12);
  EXPECT_LE(dist(fourier_matrix(1).matrix(), ComplexMatrix::Identity(1, 1)), 1e-12);
  EXPECT_LE(unitarity_residual(fourier_matrix(4).matrix()), 1e-12);
}

TEST(Reflection, ExamplesAndRelations) {
  EXPECT_LE(dist(reflection_operator(2).matrix(), ComplexMatrix::Identity(2, 2)), 1e-12);
  ComplexMatrix r3 = ComplexMatrix::Zero(3, 3);
  r3(0, 0) = 1.0;
  r3(1, 2) = 1.0;
  r3(2, 1) = 1.0;
  EXPECT_LE(dist(reflection_operator(3).matrix(), r3), 1e-12);
  for (int n : {2, 3, 4, 5}) {
    const ComplexMatrix r = reflection_operator(n).matrix();
    const ComplexMatrix u = position_shift(n).matrix();
    const ComplexMatrix v = momentum_shift(n).matrix();
    const ComplexMatrix f = fourier_matrix(n).matrix();
    EXPECT_LE(dist(u * r, r * u.adjoint()), 1e-12);
    EXPECT_LE(dist(v * r, r * v.adjoint()), 1e-12);
    EXPECT_LE(dist(r, f * f), 1e-12) << "N=" << n;
  }
}

TEST(Translation, Examples) {
  EXPECT_LE(dist(translation_operator(0, 0, 3).matrix(), ComplexMatrix::Identity(3, 3)), 1e-12);
  const Complex i(0.0, 1.0);
  EXPECT_LE(dist(translation_operator(1, 1, 2).matrix(), i * m2(0, -1, 1, 0)), 1e-12);
  const ComplexMatrix t = translation_operator(1, 1, 2).matrix();
  EXPECT_LE(dist(translation_operator(2, 2, 2).matrix(), t * t), 1e-12);
}

TEST(Translation, PowersMatchScaledArguments) {
  for (int n : {2, 3, 4}) {
    for (int q = 0; q < 2 * n; ++q) {
      for (int p = 0; p < 2 * n; ++p) {
        const ComplexMatrix t = translation_operator(q, p, n).matrix();
        ComplexMatrix acc = ComplexMatrix::Identity(n, n);
        for (int l = 0; l < 2 * n; ++l) {
          EXPECT_LE(dist(translation_operator(l * q, l * p, n).matrix(), acc), 1e-11);
          acc = acc * t;
        }
      }
    }
  }
}

TEST(PointOperator, OriginAtN2IsQuarterIdentity) {
  EXPECT_LE(dist(point_operator(PhasePoint(0, 0, 2)).matrix, 0.25 * ComplexMatrix::Identity(2, 2)), 1e-12);
}

TEST(PointOperator, Hermitian) {
  for (int n : {2, 4, 6, 8}) {
    const PointOperatorGrid ops(n);
    for (const auto& a : grid_points(n, GridKind::Full)) EXPECT_TRUE(is_hermitian(ops.at(a), 1e-12));
  }
}

TEST(PointOperator, ClosedFormMatchesFourierSum) {
  for (int n : {2, 4}) {
    for (int q = 0; q < 2 * n; ++q)
      for (int p = 0; p < 2 * n; ++p)
        EXPECT_LE(dist(point_operator(PhasePoint(q, p, n)).matrix, fourier_sum_point_operator(q, p, n)), 1e-10)
            << "N=" << n << " (" << q << "," << p << ")";
  }
}

TEST(PointOperator, SymmetryRelation) {
  for (int n : {2, 4}) {
    const PointOperatorGrid ops(n);
    for (const auto& a : grid_points(n, GridKind::Full))
      for (int sq = 0; sq <= 1; ++sq)
        for (int sp = 0; sp <= 1; ++sp)
          EXPECT_LE(dist(ops.at(a.q + sq * n, a.p + sp * n), symmetry_sign(a.q, a.p, sq, sp, n) * ops.at(a)), 1e-12);
  }
}

TEST(PointOperator, TraceOrthogonalityOnCore) {
  for (int n : {2, 4}) {
    const PointOperatorGrid ops(n);
    const auto core = grid_points(n, GridKind::Core);
    for (const auto& a : core)
      for (const auto& b : core) {
        const double expected = (a == b) ? 1.0 / (4.0 * n) : 0.0;
        EXPECT_LE(std::abs(trace_product({ops.at(a), ops.at(b)}) - expected), 1e-12);
      }
  }
}

TEST(GridPoints, OrderingAndSize) {
  const auto full = grid_points(2, GridKind::Full);
  ASSERT_EQ(full.size(), 16u);
  EXPECT_EQ(full[1], PhasePoint(0, 1, 2));
  EXPECT_EQ(full[4], PhasePoint(1, 0, 2));
  for (std::size_t i = 0; i < full.size(); ++i) EXPECT_EQ(flat_index(full[i]), static_cast<int>(i));
  EXPECT_EQ(grid_points(3, GridKind::Core).size(), 9u);
  EXPECT_EQ(PhasePoint(-1, 9, 2), PhasePoint(3, 1, 2));
}

TEST(GammaKernel, Examples) {
  const PhasePoint o(0, 0, 2);
  EXPECT_LE(std::abs(gamma_kernel(o, o, o) - Complex(1.0 / 32.0)), 1e-12);
  const auto pts = grid_points(2, GridKind::Full);
  for (std::size_t i = 0; i < pts.size(); i += 3)
    for (std::size_t j = 1; j < pts.size(); j += 5)
      for (std::size_t k = 2; k < pts.size(); k += 7) {
        const Complex g = gamma_kernel(pts[i], pts[j], pts[k]);
        EXPECT_LE(std::abs(g - gamma_kernel(pts[j], pts[k], pts[i])), 1e-12);
        EXPECT_LE(std::abs(g - gamma_kernel(pts[k], pts[i], pts[j])), 1e-12);
      }
}

TEST(PhaseLine, PointEnumeration) {
  const auto horizontal = line_points(PhaseLine(1, 0, 0, 2));
  const std::vector<PhasePoint> expected{{0, 0, 2}, {1, 0, 2}, {2, 0, 2}, {3, 0, 2}};
  EXPECT_EQ(horizontal, expected);
  const auto q3 = line_points(PhaseLine(0, 1, 1, 2));
  ASSERT_EQ(q3.size(), 4u);
  for (const auto& a : q3) EXPECT_EQ(a.q, 3);
  for (const auto& a : line_points(PhaseLine(1, 0, 0, 2))) EXPECT_FALSE(PhaseLine(1, 0, 1, 2).contains(a.q, a.p));
}

TEST(PhaseLine, Validation) {
  EXPECT_THROW(PhaseLine(0, 0, 1, 2), Error);
  try {
    line_points(PhaseLine(2, 0, 1, 2));
    FAIL() << "expected EmptyLine";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyLine);
  }
  EXPECT_TRUE(PhaseLine::constant_q(2, 2).contains(2, 3));
  EXPECT_TRUE(PhaseLine::constant_p(1, 2).contains(0, 1));
}

TEST(LineProjector, PositionAndMomentumExamples) {
  ComplexVector e0 = ComplexVector::Zero(2);
  e0(0) = 1.0;
  EXPECT_LE(dist(line_projector(PhaseLine::constant_q(0, 2)), projector(e0)), 1e-12);
  EXPECT_LE(max_abs(line_projector(PhaseLine::constant_q(1, 2))), 1e-12);
  // L(1,0,n3) is the line p = n3: its projector selects momentum ket n3/2.
  const ComplexVector k0 = fourier_matrix(2).matrix().col(0);
  EXPECT_LE(dist(line_projector(PhaseLine(1, 0, 0, 2)), projector(k0)), 1e-12);
  EXPECT_LE(max_abs(line_projector(PhaseLine(1, 0, 1, 2))), 1e-12);
}

TEST(LineProjector, HermitianIdempotentAndSpectral) {
  const std::vector<std::pair<int, int>> directions{{1, 0}, {0, 1}, {1, 1}};
  for (int n : {2, 4}) {
    for (const auto& [n1, n2] : directions) {
      for (int n3 = 0; n3 < 2 * n; ++n3) {
        const PhaseLine line(n1, n2, n3, n);
        const ComplexMatrix a = line_projector(line);
        EXPECT_TRUE(is_hermitian(a, 1e-10));
        EXPECT_LE(dist(a * a, a), 1e-10);
        EXPECT_LE(dist(a, line_projector_spectral(line)), 1e-10);
      }
    }
  }
}

}  // namespace
}  // namespace dwigner
