#pragma once

// Discrete Wigner tables on G_2N: evaluation, closed forms, reconstruction,
// symmetry extension, marginals and the purity constraint.

#include <variant>
#include <vector>

#include "dwigner/matrix.hpp"
#include "dwigner/phase_space.hpp"

namespace dwigner {

/// Real 2N×2N table W(q,p), row q, column p. N must be even.
class WignerTable {
 public:
  WignerTable(int n, RealMatrix values);
  static WignerTable zero(int n);

  int n() const { return n_; }
  int side() const { return 2 * n_; }
  const RealMatrix& values() const { return values_; }
  RealMatrix& values() { return values_; }

  /// Entry at (q mod 2N, p mod 2N).
  double at(long long q, long long p) const;
  double at(const PhasePoint& a) const { return values_(a.q, a.p); }

  /// Σ over all of G_2N.
  double sum() const { return values_.sum(); }

 private:
  int n_;
  RealMatrix values_;
};

void require_even(int n);

struct BasisKet {
  int q0;
};

/// (|q0⟩ + e^{−iφ}|q1⟩)/√2.
struct Superposition {
  int q0;
  int q1;
  double phi;
};

struct DensitySpec {
  ComplexMatrix matrix;
};

using StateSpec = std::variant<BasisKet, Superposition, DensitySpec>;

/// Unit vector of a pure spec; throws InvalidArgument for DensitySpec.
ComplexVector state_vector(const StateSpec& spec, int n);
DensityOperator density_from_spec(const StateSpec& spec, int n);

/// W(α) = tr(Â(α)ρ) for every α ∈ G_2N. Throws OddDimension for odd N and
/// NonHermitianResult if any trace has an imaginary part above 1e-10.
WignerTable wigner_table(const DensityOperator& rho);
WignerTable wigner_table(const DensityOperator& rho, const PointOperatorGrid& ops);

/// W(q,p) = (1/2N) Σ_n ⟨q−n|ρ|n⟩ e^{iπp(2n−q)/N}, accepting any N×N matrix
/// (the result is complex-valued in general; real parts are returned after a
/// 1e-10 realness check).
WignerTable wigner_table_sum_form(const ComplexMatrix& rho);

/// Table of |q0⟩⟨q0|: 1/2N on row 2q0, ±1/2N (sign (−1)^p) on row 2q0 ± N.
WignerTable wigner_pure_position(int q0, int n);

/// Closed form ½(W_{q0} + W_{q1} + ΔW) of (|q0⟩ + e^{−iφ}|q1⟩)/√2 with the
/// interference term ΔW = (1/N) δ_N(q̃) (−1)^{p q̃/N} cos(πp(q1−q0)/N + φ),
/// q̃ = q0 + q1 − q.
WignerTable wigner_superposition(int q0, int q1, double phi, int n);

/// 2 Re{a b* ⟨ket1|Â(α)|ket0⟩}: the interference part of W for a|ket0⟩ + b|ket1⟩.
double superposition_cross_term(Complex a, Complex b, const PhasePoint& alpha, int ket0 = 0, int ket1 = 1);

enum class ReconstructionSum {
  Core,  // 4N Σ_{α∈G_N} W(α) Â(α)
  Full,  // N Σ_{α∈G_2N} W(α) Â(α)
};

ComplexMatrix reconstruct_operator(const WignerTable& table, ReconstructionSum sum = ReconstructionSum::Full);

/// Density operator of a table. Throws InconsistentTable when the symmetry
/// residual exceeds 1e-8 and NotDensity when the result is not a state.
DensityOperator reconstruct(const WignerTable& table);

/// Max over G_2N of |W(q+σ_qN, p+σ_pN) − W(q,p)(−1)^{σ_p q + σ_q p + σ_q σ_p N}|.
double symmetry_residual(const WignerTable& table);

RealMatrix restrict_to_core(const WignerTable& table);
WignerTable extend_by_symmetry(const RealMatrix& core);

/// Entry q: Σ_p W(2q, p), for q = 0..N−1.
std::vector<double> marginal_position(const WignerTable& table);
/// Entry p: Σ_q W(q, 2p), for p = 0..N−1.
std::vector<double> marginal_momentum(const WignerTable& table);
/// Σ_p W(2q+1, p) and Σ_q W(q, 2p+1); these vanish for every state.
std::vector<double> odd_position_sums(const WignerTable& table);
std::vector<double> odd_momentum_sums(const WignerTable& table);

/// φ(p) = Σ_q W_ψ(q, 2p) for p = 0..2N−1.
std::vector<double> w_transform(const StateSpec& psi, int n);

/// N Σ_{α∈G_2N} W₁(α)W₂(α), which equals tr(ρ₁ρ₂).
double overlap(const WignerTable& a, const WignerTable& b);

/// Prefactor C of the purity condition W(α) = C Σ_{β,γ∈G_N} Γ(α,β,γ)W(β)W(γ).
/// Expanding ρ over G_N with weight 4N makes it (4N)² = 16N².
double purity_prefactor(int n);

/// max_α |W(α) − C Σ_{β,γ∈G_N} Γ(α,β,γ) W(β)W(γ)|; zero exactly for pure states.
double purity_residual(const WignerTable& table);

}  // namespace dwigner
