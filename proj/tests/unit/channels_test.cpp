#include <gtest/gtest.h>

#include <vector>

#include "dwigner/channels.hpp"
#include "dwigner/errors.hpp"
#include "dwigner/random.hpp"

namespace dwigner {
namespace {

double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(ComplexMatrix(a - b)); }
double dist(const RealMatrix& a, const RealMatrix& b) { return max_abs(RealMatrix(a - b)); }

ComplexMatrix m2(double a, double b, double c, double d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

RealMatrix stochastic2(double p11, double p12) {
  RealMatrix p(2, 2);
  p << p11, p12, 1.0 - p11, 1.0 - p12;
  return p;
}

TEST(KrausChannel, ValidatesTracePreservation) {
  try {
    KrausChannel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)});
    FAIL() << "expected InvalidChannel";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidChannel);
  }
  EXPECT_THROW(KrausChannel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(3, 3)}), Error);
  EXPECT_THROW(KrausChannel(std::vector<ComplexMatrix>{}), Error);
  EXPECT_LE(KrausChannel::identity(3).trace_preservation_residual(), 0.0);
}

TEST(ApplyChannel, Examples) {
  random::Engine rng(101);
  const DensityOperator rho = random::random_density(3, rng);
  EXPECT_LE(dist(apply_channel(KrausChannel::identity(3), rho).matrix(), rho.matrix()), 1e-15);

  const double p11 = 0.3, p12 = 0.8, r = 0.6;
  const KrausChannel s = KrausChannel::stochastic(stochastic2(p11, p12));
  ComplexMatrix d = m2(r, 0.0, 0.0, 1.0 - r);
  const ComplexMatrix out = apply_channel(s, DensityOperator(d)).matrix();
  const double a = p11 * r + p12 * (1 - r);
  EXPECT_LE(dist(out, m2(a, 0.0, 0.0, 1.0 - a)), 1e-12);

  // Kraus set {|i⟩⟨j|/√N} sends every state to I/N.
  const int n = 3;
  std::vector<ComplexMatrix> k;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(i, j) = 1.0 / std::sqrt(static_cast<double>(n));
      k.push_back(e);
    }
  EXPECT_LE(dist(apply_channel(KrausChannel(k), rho).matrix(), ComplexMatrix(ComplexMatrix::Identity(n, n) / 3.0)), 1e-12);
}

TEST(ChannelWigner, CommutesWithApplication) {
  random::Engine rng(103);
  for (int n : {2, 4}) {
    for (int terms = 2; terms <= 4; ++terms) {
      const KrausChannel ch = random::random_channel(n, terms, rng);
      const DensityOperator rho = random::random_density(n, rng);
      EXPECT_LE(dist(channel_wigner(ch, rho).values(), wigner_table(apply_channel(ch, rho)).values()), 1e-12);
    }
  }
}

TEST(ChannelWigner, IdentityStationarityAndOddRows) {
  random::Engine rng(107);
  const DensityOperator rho = random::random_density(4, rng);
  EXPECT_LE(dist(channel_wigner(KrausChannel::identity(4), rho).values(), wigner_table(rho).values()), 1e-12);

  // Uniform distribution is stationary for a doubly stochastic P.
  const KrausChannel s = KrausChannel::stochastic(stochastic2(0.25, 0.75));
  const DensityOperator mixed = DensityOperator::maximally_mixed(2);
  const WignerTable out = channel_wigner(s, mixed);
  EXPECT_LE(dist(out.values(), wigner_table(mixed).values()), 1e-12);

  const WignerTable generic = channel_wigner(s, random::random_density(2, rng));
  for (int q = 1; q < 4; q += 2) EXPECT_LE(generic.values().row(q).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Propagator, IdentityAndFourier) {
  random::Engine rng(109);
  const DensityOperator rho = random::random_density(4, rng);
  const WignerTable w = wigner_table(rho);
  EXPECT_LE(dist(unitary_propagator(UnitaryMatrix::identity(4)).apply(w).values(), w.values()), 1e-12);

  const UnitaryMatrix f = fourier_matrix(2);
  const DensityOperator e0 = DensityOperator::basis(2, 0);
  const WignerTable direct = wigner_table(DensityOperator(conjugate(f, e0.matrix())));
  EXPECT_LE(dist(unitary_propagator(f).apply(wigner_table(e0)).values(), direct.values()), 1e-12);
  // U_FT² = R̂ fixes |0⟩.
  EXPECT_LE(dist(unitary_propagator(f).apply(wigner_table(e0), 2).values(), wigner_table(e0).values()), 1e-12);
}

TEST(Propagator, MatchesConjugationForRandomUnitaries) {
  random::Engine rng(113);
  for (int n : {2, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      const UnitaryMatrix u = random::random_unitary(n, rng);
      const DensityOperator rho = random::random_density(n, rng);
      const PhasePropagator z = unitary_propagator(u);
      const WignerTable direct = wigner_table(DensityOperator(conjugate(u, rho.matrix())));
      EXPECT_LE(dist(z.apply(wigner_table(rho)).values(), direct.values()), 1e-9);
      const WignerTable twice = wigner_table(DensityOperator(conjugate(u, conjugate(u, rho.matrix()))));
      EXPECT_LE(dist(z.apply(wigner_table(rho), 2).values(), twice.values()), 1e-9);
    }
  }
}

TEST(Propagator, EntriesMatchTraceDefinition) {
  random::Engine rng(127);
  const int n = 2;
  const UnitaryMatrix u = random::random_unitary(n, rng);
  const PhasePropagator z = unitary_propagator(u);
  ASSERT_EQ(z.matrix().rows(), 4 * n * n);
  for (const auto& a : grid_points(n, GridKind::Full))
    for (const auto& b : grid_points(n, GridKind::Full)) {
      const Complex t = static_cast<double>(n) * trace_product({point_operator(a).matrix, u.matrix(),
                                                                 point_operator(b).matrix, u.adjoint()});
      EXPECT_NEAR(z.entry(a, b), t.real(), 1e-12);
      EXPECT_LE(std::abs(t.imag()), 1e-12);
    }
}

TEST(Propagator, RejectsOddAndOversizedDimensions) {
  EXPECT_THROW(unitary_propagator(UnitaryMatrix::identity(3)), Error);
  EXPECT_THROW(unitary_propagator(UnitaryMatrix::identity(kMaxPropagatorDim + 2)), Error);
}

TEST(Propagator, GammaInvarianceBruteForce) {
  // Full 16³ contraction at N=2 with Γ tabulated directly from the operators.
  const int n = 2;
  const int side = 4 * n * n;
  const auto pts = grid_points(n, GridKind::Full);
  const PointOperatorGrid ops(n);
  std::vector<Complex> gamma(side * side * side);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      for (int k = 0; k < side; ++k)
        gamma[(i * side + j) * side + k] = (ops.at(pts[i]) * ops.at(pts[j]) * ops.at(pts[k])).trace();

  random::Engine rng(131);
  std::uniform_int_distribution<int> pick(0, side - 1);
  for (const UnitaryMatrix& u : {UnitaryMatrix::identity(n), fourier_matrix(n), random::random_unitary(n, rng)}) {
    const PhasePropagator z = unitary_propagator(u);
    const RealMatrix& zm = z.matrix();
    for (int trial = 0; trial < 6; ++trial) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      Complex s = 0.0;
      for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
          for (int k = 0; k < side; ++k) s += zm(a, i) * zm(b, j) * zm(c, k) * gamma[(i * side + j) * side + k];
      const Complex target = gamma[(a * side + b) * side + c];
      EXPECT_LE(std::abs(s - target), 1e-8);
      EXPECT_LE(std::abs(propagated_gamma(z, ops, pts[a], pts[b], pts[c]) - s), 1e-12);
    }
  }
}

TEST(FourierConjugation, StochasticExampleKrausOperators) {
  random::Engine rng(137);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const UnitaryMatrix f = fourier_matrix(2);
  for (int trial = 0; trial < 20; ++trial) {
    const double p11 = u(rng), p12 = u(rng), r = u(rng);
    const RealMatrix p = stochastic2(p11, p12);
    const KrausChannel g = fourier_conjugate_channel(KrausChannel::stochastic(p), f);
    ASSERT_EQ(g.kraus().size(), 4u);
    const std::vector<ComplexMatrix> reference{
        0.5 * std::sqrt(p(0, 0)) * m2(1, 1, 1, 1), 0.5 * std::sqrt(p(0, 1)) * m2(1, -1, 1, -1),
        0.5 * std::sqrt(p(1, 0)) * m2(1, 1, -1, -1), 0.5 * std::sqrt(p(1, 1)) * m2(1, -1, -1, 1)};
    for (int i = 0; i < 4; ++i) EXPECT_LE(dist(g.kraus()[i], reference[i]), 1e-12) << "V" << i + 1;

    const DensityOperator rho(m2(r, 0.0, 0.0, 1.0 - r));
    const ComplexMatrix composite = conjugate(f, apply_channel(KrausChannel::stochastic(p), rho).matrix());
    const double off = p11 * r + p12 * (1.0 - r) - 0.5;
    EXPECT_LE(dist(composite, m2(0.5, off, off, 0.5)), 1e-12);
    EXPECT_LE(dist(apply_channel(g, DensityOperator(conjugate(f, rho.matrix()))).matrix(), composite), 1e-12);
  }
}

TEST(FourierConjugation, DiagramCommutes) {
  random::Engine rng(139);
  EXPECT_LE(dist(fourier_conjugate_channel(KrausChannel::stochastic(stochastic2(0.2, 0.9)), UnitaryMatrix::identity(2))
                     .kraus()[1],
                 KrausChannel::stochastic(stochastic2(0.2, 0.9)).kraus()[1]),
            0.0);
  for (int n : {2, 3, 4}) {
    const KrausChannel ch = random::random_channel(n, 3, rng);
    const UnitaryMatrix f = random::random_unitary(n, rng);
    const DensityOperator rho = random::random_density(n, rng);
    const KrausChannel g = fourier_conjugate_channel(ch, f);
    EXPECT_LE(g.trace_preservation_residual(), 1e-12);
    const ComplexMatrix lhs = conjugate(f, apply_channel(ch, rho).matrix());
    const ComplexMatrix rhs = apply_channel(g, DensityOperator(conjugate(f, rho.matrix()))).matrix();
    EXPECT_LE(dist(lhs, rhs), 1e-12);
  }
}

TEST(FanoSqrt, IdentityChannelAndOrigin) {
  random::Engine rng(149);
  const DensityOperator rho = random::random_density(2, rng);
  const WignerTable w = wigner_table(rho);
  for (const auto& a : grid_points(2, GridKind::Full)) {
    const auto dec = fano_sqrt_decomposition(KrausChannel::identity(2), a);
    EXPECT_LE(std::abs(dec.cyclic_form(KrausChannel::identity(2), rho) - w.at(a)), 1e-10);
  }
  const KrausChannel s = KrausChannel::stochastic(stochastic2(0.4, 0.7));
  const auto dec = fano_sqrt_decomposition(s, PhasePoint(0, 0, 2));
  EXPECT_TRUE(dec.psd);
  EXPECT_LE(dist(dec.sqrt_factor, ComplexMatrix(0.5 * ComplexMatrix::Identity(2, 2))), 1e-12);
  EXPECT_LE(std::abs(dec.adjoint_form(rho) - channel_wigner(s, rho).at(0, 0)), 1e-10);
}

TEST(FanoSqrt, CyclicIdentityEverywhereAdjointOnPsdPoints) {
  random::Engine rng(151);
  for (int n : {2, 4}) {
    const KrausChannel ch = random::random_channel(n, 3, rng);
    const DensityOperator rho = random::random_density(n, rng);
    const WignerTable target = channel_wigner(ch, rho);
    int psd_points = 0;
    for (const auto& a : grid_points(n, GridKind::Full)) {
      const auto dec = fano_sqrt_decomposition(ch, a);
      EXPECT_LE(std::abs(dec.cyclic_form(ch, rho) - target.at(a)), 1e-10);
      EXPECT_LE(dist(ComplexMatrix(dec.sqrt_factor * dec.sqrt_factor), point_operator(a).matrix), 1e-12);
      if (dec.psd) {
        ++psd_points;
        EXPECT_LE(std::abs(dec.adjoint_form(rho) - target.at(a)), 1e-10);
      }
    }
    EXPECT_EQ(psd_points, n == 2 ? 4 : 0);
  }
}

}  // namespace
}  // namespace dwigner
