#include "dwigner/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "dwigner/channels.hpp"
#include "dwigner/random.hpp"
#include "dwigner/weyl.hpp"
#include "dwigner/wigner.hpp"

namespace dwigner::verify {

namespace {

constexpr int kRandomTrials = 10;

class Suite {
 public:
  explicit Suite(double scale) : scale_(scale) {}

  void at_most(std::string name, double measured, double tolerance) {
    const double t = tolerance * scale_;
    results_.push_back({std::move(name), measured, t, false, measured <= t});
  }

  void above(std::string name, double measured, double bound) {
    results_.push_back({std::move(name), measured, bound, true, measured > bound});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  double scale_;
  std::vector<CheckResult> results_;
};

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs_of(const std::vector<double>& a) {
  double worst = 0.0;
  for (double v : a) worst = std::max(worst, std::abs(v));
  return worst;
}

void check_matrix_core(Suite& s, int n, random::Engine& rng) {
  double delta = 0.0;
  for (int q = -4 * n; q <= 4 * n; ++q) {
    Complex sum{0.0, 0.0};
    for (int k = 0; k < n; ++k) sum += std::polar(1.0, -2.0 * std::numbers::pi * q * k / n);
    sum /= static_cast<double>(n);
    delta = std::max({delta, std::abs(sum - periodic_delta(q, n)), std::abs(periodic_delta(q, n) - periodic_delta(q + n, n))});
  }
  s.at_most("periodic delta equals exponential sum", delta, tol::kExact);

  double eig = 0.0;
  double cyclic = 0.0;
  for (int t = 0; t < kRandomTrials; ++t) {
    const ComplexMatrix g = random::gaussian_matrix(n, n, rng);
    const ComplexMatrix h = g + g.adjoint();
    eig = std::max(eig, max_abs(ComplexMatrix(hermitian_eig(h).reconstruct() - h)));
    const ComplexMatrix a = random::gaussian_matrix(n, n, rng);
    const ComplexMatrix b = random::gaussian_matrix(n, n, rng);
    const ComplexMatrix c = random::gaussian_matrix(n, n, rng);
    const Complex abc = trace_product({a, b, c});
    cyclic = std::max({cyclic, std::abs(abc - trace_product({b, c, a})), std::abs(abc - trace_product({c, a, b}))});
  }
  s.at_most("hermitian_eig reconstructs", eig, tol::kEigen);
  s.at_most("trace_product cyclic", cyclic, tol::kExact * 10 * n);
}

void check_weyl(Suite& s, int n, random::Engine& rng) {
  for (const auto& cfg : {weyl::WeylConfig{n, 0.0, 0.0}, weyl::WeylConfig{n, 0.3, 0.7}}) {
    const ComplexMatrix U = weyl::clock_operator(cfg).matrix();
    const ComplexMatrix V = weyl::shift_operator(cfg).matrix();
    double relation = 0.0;
    double ortho = 0.0;
    double adjoint = 0.0;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const ComplexMatrix lhs = unitary_power(U, a) * unitary_power(V, b);
        const ComplexMatrix rhs = std::polar(1.0, 2.0 * std::numbers::pi * a * b / n) * unitary_power(V, b) * unitary_power(U, a);
        relation = std::max(relation, max_abs(ComplexMatrix(lhs - rhs)));
        const ComplexMatrix w = weyl::weyl_operator(cfg, a, b).matrix();
        adjoint = std::max(adjoint, max_abs(ComplexMatrix(w.adjoint() - weyl::weyl_operator(cfg, -a, -b).matrix())));
        for (int c = 0; c < n; ++c) {
          for (int d = 0; d < n; ++d) {
            const Complex t = trace_product({ComplexMatrix(w.adjoint()), weyl::weyl_operator(cfg, c, d).matrix()});
            ortho = std::max(ortho, std::abs(t - ((a == c && b == d) ? static_cast<double>(n) : 0.0)));
          }
        }
      }
    }
    const std::string tag = cfg.alpha_u == 0.0 ? " (unphased)" : " (phased)";
    s.at_most("Weyl relation U^a V^b = w^{ab} V^b U^a" + tag, relation, tol::kExact);
    s.at_most("Weyl trace orthogonality" + tag, ortho, tol::kExact * 10);
    s.at_most("Weyl adjoint W*(n) = W(-n)" + tag, adjoint, tol::kExact);
    const ComplexMatrix A = random::gaussian_matrix(n, n, rng);
    s.at_most("Weyl expansion round trip" + tag,
              max_abs(ComplexMatrix(weyl::weyl_resynthesize(cfg, weyl::weyl_expand(cfg, A)) - A)), tol::kEigen);
  }
}

void check_phase_space(Suite& s, int n) {
  const ComplexMatrix U = position_shift(n).matrix();
  const ComplexMatrix V = momentum_shift(n).matrix();
  const ComplexMatrix R = reflection_operator(n).matrix();
  const ComplexMatrix F = fourier_matrix(n).matrix();
  s.at_most("V U = e^{2pi i/N} U V", max_abs(ComplexMatrix(V * U - pi_phase(2, n) * U * V)), tol::kExact);
  s.at_most("U R = R U^-1 and V R = R V^-1",
            std::max(max_abs(ComplexMatrix(U * R - R * U.adjoint())), max_abs(ComplexMatrix(V * R - R * V.adjoint()))),
            tol::kExact);
  s.at_most("R = U_FT^2", max_abs(ComplexMatrix(F * F - R)), tol::kExact);

  double power = 0.0;
  for (int q = 0; q < 2 * n; ++q) {
    for (int p = 0; p < 2 * n; p += std::max(1, n / 2)) {
      const ComplexMatrix t = translation_operator(q, p, n).matrix();
      ComplexMatrix acc = ComplexMatrix::Identity(n, n);
      for (int lambda = 0; lambda < 2 * n; ++lambda) {
        power = std::max(power, max_abs(ComplexMatrix(translation_operator(lambda * q, lambda * p, n).matrix() - acc)));
        acc = acc * t;
      }
    }
  }
  s.at_most("T(lq, lp) = T(q, p)^l", power, tol::kExact * 10);

  const PointOperatorGrid ops(n);
  double herm = 0.0;
  double fourier_sum = 0.0;
  double symmetry = 0.0;
  for (const auto& a : grid_points(n, GridKind::Full)) {
    const ComplexMatrix& A = ops.at(a);
    herm = std::max(herm, max_abs(ComplexMatrix(A - A.adjoint())));
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (int l = 0; l < 2 * n; ++l)
      for (int lp = 0; lp < 2 * n; ++lp)
        sum += translation_operator(l, lp, n).matrix() * pi_phase(-(static_cast<long long>(lp) * a.q - l * a.p), n);
    fourier_sum = std::max(fourier_sum, max_abs(ComplexMatrix(sum / (4.0 * n * n) - A)));
    for (int sq = 0; sq <= 1; ++sq) {
      for (int sp = 0; sp <= 1; ++sp) {
        const double sign = mod(static_cast<long long>(sp) * a.q + sq * a.p + sq * sp * n, 2) == 0 ? 1.0 : -1.0;
        symmetry = std::max(symmetry, max_abs(ComplexMatrix(ops.at(a.q + sq * n, a.p + sp * n) - sign * A)));
      }
    }
  }
  s.at_most("point operators Hermitian", herm, tol::kExact);
  s.at_most("point operator closed form = Fourier sum", fourier_sum, tol::kEigen);
  s.at_most("point operator symmetry relation", symmetry, tol::kExact);

  double ortho = 0.0;
  const auto core = grid_points(n, GridKind::Core);
  for (const auto& a : core) {
    for (const auto& b : core) {
      const double expected = (a == b) ? 1.0 / (4.0 * n) : 0.0;
      ortho = std::max(ortho, std::abs(trace_product({ops.at(a), ops.at(b)}) - expected));
    }
  }
  s.at_most("tr(A(a)A(a')) = delta/4N on G_N", ortho, tol::kExact);

  double idem = 0.0;
  double spectral = 0.0;
  for (const auto& [n1, n2] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
    for (int n3 = 0; n3 < 2 * n; ++n3) {
      const PhaseLine line(n1, n2, n3, n);
      const ComplexMatrix P = line_projector(line);
      idem = std::max({idem, max_abs(ComplexMatrix(P * P - P)), max_abs(ComplexMatrix(P - P.adjoint()))});
      spectral = std::max(spectral, max_abs(ComplexMatrix(P - line_projector_spectral(line))));
    }
  }
  s.at_most("line projectors Hermitian and idempotent", idem, tol::kEigen);
  s.at_most("line projector = translation spectral form", spectral, tol::kEigen);
}

void check_wigner(Suite& s, int n, random::Engine& rng) {
  const PointOperatorGrid ops(n);
  const ComplexMatrix F = fourier_matrix(n).matrix();
  double sum_form = 0.0, overlap_err = 0.0, mixing = 0.0, position = 0.0, momentum = 0.0, odd = 0.0;
  double recon = 0.0, recon_pair = 0.0, round_trip = 0.0, extension = 0.0, lines = 0.0;
  for (int t = 0; t < kRandomTrials; ++t) {
    const DensityOperator r1 = random::random_density(n, rng);
    const DensityOperator r2 = random::random_density(n, rng);
    const WignerTable w1 = wigner_table(r1, ops);
    const WignerTable w2 = wigner_table(r2, ops);
    sum_form = std::max(sum_form, max_abs(RealMatrix(wigner_table_sum_form(r1.matrix()).values() - w1.values())));
    overlap_err = std::max(overlap_err, std::abs(overlap(w1, w2) - (r1.matrix() * r2.matrix()).trace().real()));
    const double a = 0.3;
    const WignerTable mix = wigner_table(DensityOperator(a * r1.matrix() + (1 - a) * r2.matrix(), tol::kEigen), ops);
    mixing = std::max(mixing, max_abs(RealMatrix(mix.values() - a * w1.values() - (1 - a) * w2.values())));

    std::vector<double> diag(n), mom(n);
    for (int k = 0; k < n; ++k) {
      diag[k] = r1.matrix()(k, k).real();
      mom[k] = (F.col(k).adjoint() * r1.matrix() * F.col(k))(0, 0).real();
    }
    position = std::max(position, max_diff(marginal_position(w1), diag));
    momentum = std::max(momentum, max_diff(marginal_momentum(w1), mom));
    odd = std::max({odd, max_abs_of(odd_position_sums(w1)), max_abs_of(odd_momentum_sums(w1))});

    const ComplexMatrix full = reconstruct_operator(w1, ReconstructionSum::Full);
    const ComplexMatrix core = reconstruct_operator(w1, ReconstructionSum::Core);
    recon = std::max(recon, max_abs(ComplexMatrix(full - r1.matrix())));
    recon_pair = std::max(recon_pair, max_abs(ComplexMatrix(full - core)));
    round_trip = std::max(round_trip, max_abs(RealMatrix(wigner_table(reconstruct(w1), ops).values() - w1.values())));
    extension = std::max(extension, max_abs(RealMatrix(extend_by_symmetry(restrict_to_core(w1)).values() - w1.values())));

    for (int c = 0; c < 2 * n; ++c) {
      double line_sum = 0.0;
      for (const auto& pt : line_points(PhaseLine::constant_q(c, n))) line_sum += w1.at(pt);
      const double expected = c % 2 == 0 ? r1.matrix()(c / 2, c / 2).real() : 0.0;
      lines = std::max(lines, std::abs(line_sum - expected));
    }
  }
  s.at_most("sum form = trace definition", sum_form, tol::kEigen);
  s.at_most("tr(r1 r2) = N sum W1 W2", overlap_err, tol::kEigen);
  s.at_most("affine mixing is linear", mixing, tol::kEigen);
  s.at_most("position marginal = <q|rho|q>", position, tol::kEigen);
  s.at_most("momentum marginal = <p|rho|p>", momentum, tol::kEigen);
  s.at_most("odd-index marginal sums vanish", odd, tol::kExact);
  s.at_most("reconstruction recovers rho", recon, tol::kEigen);
  s.at_most("core and full reconstruction agree", recon_pair, tol::kEigen);
  s.at_most("rho -> W -> rho -> W round trip", round_trip, tol::kEigen);
  s.at_most("extend_by_symmetry(restrict_to_core(W)) = W", extension, tol::kExact);
  s.at_most("constant-q line sums = <q/2|rho|q/2>", lines, tol::kEigen);

  double closed = 0.0;
  for (int q0 = 0; q0 < n; ++q0) {
    closed = std::max(closed, max_abs(RealMatrix(wigner_pure_position(q0, n).values() -
                                                 wigner_table(DensityOperator::basis(n, q0), ops).values())));
  }
  double sup = 0.0;
  double wt = 0.0;
  for (const double phi : {0.0, 0.7, std::numbers::pi}) {
    for (int q1 = 1; q1 < n; ++q1) {
      const Superposition spec{0, q1, phi};
      const WignerTable exact = wigner_table(density_from_spec(spec, n), ops);
      sup = std::max(sup, max_abs(RealMatrix(wigner_superposition(0, q1, phi, n).values() - exact.values())));
      const ComplexVector amplitudes = F.adjoint() * state_vector(spec, n);
      const auto phi_p = w_transform(spec, n);
      for (int p = 0; p < n; ++p) wt = std::max(wt, std::abs(phi_p[p] - std::norm(amplitudes(p))));
    }
  }
  s.at_most("position eigenstate closed form", closed, tol::kExact);
  s.at_most("superposition closed form", sup, tol::kEigen);
  s.at_most("W-transform = |<p|psi>|^2", wt, tol::kEigen);

  const ComplexVector plus = state_vector(Superposition{0, 1, 0.0}, n);
  const RealMatrix nonlinear = wigner_table(DensityOperator::pure(plus), ops).values() -
                               0.5 * (wigner_table(DensityOperator::basis(n, 0), ops).values() +
                                      wigner_table(DensityOperator::basis(n, 1), ops).values());
  s.above("superposition is not the average of its kets", max_abs(nonlinear), 0.0);

  if (n <= 4) {
    s.at_most("purity residual of a pure state", purity_residual(wigner_table(random::random_pure(n, rng), ops)), 1e-8);
    s.above("purity residual of I/N", purity_residual(wigner_table(DensityOperator::maximally_mixed(n), ops)), 0.0);
  }
}

void check_channels(Suite& s, int n, random::Engine& rng) {
  const PointOperatorGrid ops(n);
  const UnitaryMatrix F = fourier_matrix(n);
  double commute = 0.0, diagram = 0.0, validity = 0.0, cyclic = 0.0, adjoint = 0.0;
  for (int t = 0; t < kRandomTrials / 2; ++t) {
    const KrausChannel ch = random::random_channel(n, 2 + t % 3, rng);
    const DensityOperator rho = random::random_density(n, rng);
    const DensityOperator out = apply_channel(ch, rho);
    commute = std::max(commute, max_abs(RealMatrix(channel_wigner(ch, rho).values() - wigner_table(out, ops).values())));
    const KrausChannel g = fourier_conjugate_channel(ch, F);
    validity = std::max(validity, g.trace_preservation_residual());
    diagram = std::max(diagram, max_abs(ComplexMatrix(conjugate(F, out.matrix()) -
                                                      apply_channel(g, DensityOperator(conjugate(F, rho.matrix()), tol::kEigen)).matrix())));
    const WignerTable w_out = wigner_table(out, ops);
    for (const auto& a : grid_points(n, GridKind::Full)) {
      const auto dec = fano_sqrt_decomposition(ch, a);
      cyclic = std::max(cyclic, std::abs(dec.cyclic_form(ch, rho) - w_out.at(a)));
      if (dec.psd) adjoint = std::max(adjoint, std::abs(dec.adjoint_form(rho) - w_out.at(a)));
    }
  }
  s.at_most("channel/Wigner commutation", commute, tol::kExact * 10);
  s.at_most("Fourier-conjugated channel is trace preserving", validity, tol::kEigen);
  s.at_most("F(L(rho)) = G(F(rho))", diagram, tol::kExact * 10);
  s.at_most("sqrt decomposition cyclic identity", cyclic, tol::kEigen);
  s.at_most("sqrt decomposition adjoint form at PSD points", adjoint, tol::kEigen);

  double propagate = 0.0;
  double gamma = 0.0;
  std::vector<UnitaryMatrix> unitaries{UnitaryMatrix::identity(n), F};
  for (int t = 0; t < 3; ++t) unitaries.push_back(random::random_unitary(n, rng));
  for (const auto& u : unitaries) {
    const PhasePropagator z = unitary_propagator(u);
    const DensityOperator rho = random::random_density(n, rng);
    const DensityOperator moved(conjugate(u, rho.matrix()), tol::kEigen);
    propagate = std::max(propagate, max_abs(RealMatrix(z.apply(wigner_table(rho, ops)).values() - wigner_table(moved, ops).values())));
    std::uniform_int_distribution<int> coord(0, 2 * n - 1);
    for (int k = 0; k < 3; ++k) {
      const PhasePoint a(coord(rng), coord(rng), n), b(coord(rng), coord(rng), n), c(coord(rng), coord(rng), n);
      const Complex direct = trace_product({ops.at(a), ops.at(b), ops.at(c)});
      gamma = std::max(gamma, std::abs(propagated_gamma(z, ops, a, b, c) - direct));
    }
  }
  s.at_most("Z propagator reproduces U rho U*", propagate, 1e-9);
  s.at_most("Z leaves Gamma invariant", gamma, 1e-8);
}

}  // namespace

std::vector<CheckResult> run_suite(int n, std::uint64_t seed, double tolerance_scale) {
  require_even(n);
  random::Engine rng(seed);
  Suite s(tolerance_scale);
  check_matrix_core(s, n, rng);
  check_weyl(s, n, rng);
  check_phase_space(s, n);
  check_wigner(s, n, rng);
  check_channels(s, n, rng);
  return s.take();
}

}  // namespace dwigner::verify
