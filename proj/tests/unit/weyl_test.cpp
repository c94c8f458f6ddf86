#include <gtest/gtest.h>

#include "dwigner/errors.hpp"
#include "dwigner/random.hpp"
#include "dwigner/weyl.hpp"
#include "oracles.hpp"

namespace dwigner::weyl {
namespace {

using dwigner::testing::kPi;

ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(ComplexMatrix(a - b)); }

const WeylConfig kPhased[] = {{0, 0.0, 0.0}, {0, 0.3, 0.7}, {0, 1.0, 0.5}};

TEST(ClockOperator, Examples) {
  EXPECT_LE(dist(clock_operator({2, 0.0, 0.0}).matrix(), m2(1, 0, 0, -1)), 1e-12);
  EXPECT_LE(dist(clock_operator({1, 0.0, 0.0}).matrix(), ComplexMatrix::Identity(1, 1)), 1e-12);
  const ComplexMatrix u = clock_operator({4, 0.5, 0.0}).matrix();
  for (int k = 0; k < 4; ++k) EXPECT_LE(std::abs(u(k, k) - std::polar(1.0, 0.5 * kPi * (0.5 + k))), 1e-12);
  EXPECT_LE(unitarity_residual(u), 1e-12);
}

TEST(ShiftOperator, Examples) {
  EXPECT_LE(dist(shift_operator({2, 0.0, 0.0}).matrix(), m2(0, 1, 1, 0)), 1e-12);
  const ComplexMatrix v3 = shift_operator({3, 0.0, 0.0}).matrix();
  for (int j = 0; j < 3; ++j) {
    ComplexVector e = ComplexVector::Zero(3);
    e(j) = 1.0;
    const ComplexVector image = v3 * e;
    EXPECT_LE(std::abs(image((j + 1) % 3) - Complex(1.0)), 1e-12);
    EXPECT_NEAR(image.norm(), 1.0, 1e-12);
  }
  const Complex i(0.0, 1.0);
  EXPECT_LE(dist(shift_operator({2, 0.0, 0.5}).matrix(), m2(0, i, i, 0)), 1e-12);
}

TEST(WeylConfig, RejectsOutOfRangePhases) {
  EXPECT_THROW((WeylConfig{2, 1.5, 0.0}.validate()), Error);
  EXPECT_THROW((WeylConfig{2, 0.0, -0.1}.validate()), Error);
  EXPECT_THROW((WeylConfig{0, 0.0, 0.0}.validate()), Error);
}

TEST(GridIndex, ReducesModN) {
  const GridIndex g(-1, 7, 3);
  EXPECT_EQ(g.n1, 2);
  EXPECT_EQ(g.n2, 1);
}

TEST(WeylOperator, Examples) {
  const WeylConfig cfg{2, 0.0, 0.0};
  EXPECT_LE(dist(weyl_operator(cfg, 0, 0).matrix(), ComplexMatrix::Identity(2, 2)), 1e-12);
  const Complex i(0.0, 1.0);
  EXPECT_LE(dist(weyl_operator(cfg, 1, 1).matrix(), -i * m2(0, 1, -1, 0)), 1e-12);
  for (int n = 1; n <= 5; ++n) {
    const WeylConfig c{n, 0.0, 0.0};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        EXPECT_LE(std::abs(weyl_operator(c, a, b).matrix().trace() - Complex((a == 0 && b == 0) ? n : 0)), 1e-12);
  }
}

TEST(WeylOperator, RelationOrientation) {
  for (int n : {2, 3, 4, 5, 8}) {
    for (WeylConfig cfg : kPhased) {
      cfg.n = n;
      const ComplexMatrix u = clock_operator(cfg).matrix();
      const ComplexMatrix v = shift_operator(cfg).matrix();
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          const ComplexMatrix lhs = unitary_power(u, a) * unitary_power(v, b);
          const ComplexMatrix rhs = std::polar(1.0, 2.0 * kPi * a * b / n) * unitary_power(v, b) * unitary_power(u, a);
          EXPECT_LE(dist(lhs, rhs), 1e-12) << "N=" << n << " a=" << a << " b=" << b;
        }
      }
    }
  }
}

TEST(WeylOperator, TraceOrthogonality) {
  for (int n = 1; n <= 5; ++n) {
    for (WeylConfig cfg : kPhased) {
      cfg.n = n;
      for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2)
          for (int b1 = 0; b1 < n; ++b1)
            for (int b2 = 0; b2 < n; ++b2) {
              const Complex t = trace_product({weyl_operator(cfg, a1, a2).adjoint(), weyl_operator(cfg, b1, b2).matrix()});
              const double expected = (a1 == b1 && a2 == b2) ? n : 0.0;
              EXPECT_LE(std::abs(t - expected), 1e-12);
            }
    }
  }
}

TEST(WeylOperator, AdjointIsNegatedIndex) {
  for (int n = 1; n <= 5; ++n) {
    for (WeylConfig cfg : kPhased) {
      cfg.n = n;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          EXPECT_LE(dist(weyl_operator(cfg, a, b).adjoint(), weyl_operator(cfg, -a, -b).matrix()), 1e-12);
    }
  }
}

TEST(WeylOperator, CompositionLaw) {
  for (int n : {2, 3, 4}) {
    for (WeylConfig cfg : kPhased) {
      cfg.n = n;
      for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2)
          for (int b1 = 0; b1 < n; ++b1)
            for (int b2 = 0; b2 < n; ++b2) {
              const ComplexMatrix lhs = weyl_operator(cfg, a1, a2).matrix() * weyl_operator(cfg, b1, b2).matrix();
              const double phase = kPi * static_cast<double>(symplectic_form(a1, a2, b1, b2)) / n;
              const ComplexMatrix rhs = std::polar(1.0, phase) * weyl_operator(cfg, a1 + b1, a2 + b2).matrix();
              EXPECT_LE(dist(lhs, rhs), 1e-12);
            }
    }
  }
}

TEST(WeylExpand, IdentityAndBasisElements) {
  const WeylConfig cfg{3, 0.0, 0.0};
  const ComplexMatrix c = weyl_expand(cfg, ComplexMatrix::Identity(3, 3));
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected(0, 0) = 1.0;
  EXPECT_LE(dist(c, expected), 1e-12);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      ComplexMatrix delta = ComplexMatrix::Zero(3, 3);
      delta(a, b) = 1.0;
      EXPECT_LE(dist(weyl_expand(cfg, weyl_operator(cfg, a, b).matrix()), delta), 1e-12);
    }
  }
}

TEST(WeylExpand, RandomRoundTrip) {
  random::Engine rng(23);
  for (int n = 1; n <= 8; ++n) {
    for (WeylConfig cfg : kPhased) {
      cfg.n = n;
      const ComplexMatrix a = random::gaussian_matrix(n, n, rng);
      EXPECT_LE(dist(weyl_resynthesize(cfg, weyl_expand(cfg, a)), a), 1e-10) << "N=" << n;
    }
  }
}

TEST(WeylExpand, RejectsWrongShape) {
  try {
    weyl_expand({3, 0.0, 0.0}, ComplexMatrix::Identity(2, 2));
    FAIL() << "expected DimMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
  }
}

}  // namespace
}  // namespace dwigner::weyl
