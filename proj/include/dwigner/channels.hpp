#pragma once

// Kraus channels acting on states and Wigner tables, the unitary phase-space
// propagator Z and the square-root decomposition of Â(α).

#include <vector>

#include "dwigner/matrix.hpp"
#include "dwigner/phase_space.hpp"
#include "dwigner/wigner.hpp"

namespace dwigner {

/// Λ(ρ) = Σ V_i ρ V_i*, with Σ V_i* V_i = I.
class KrausChannel {
 public:
  /// Throws InvalidChannel when ‖Σ V_i*V_i − I‖_max exceeds the tolerance.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus, double tolerance = tol::kConsistency);

  static KrausChannel identity(int n);

  /// V_{ij} = √p_ij |i⟩⟨j| for a column-stochastic P, ordered row-major in (i, j).
  static KrausChannel stochastic(const RealMatrix& p);

  int dim() const { return n_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// ‖Σ V_i*V_i − I‖_max.
  double trace_preservation_residual() const;

 private:
  int n_;
  std::vector<ComplexMatrix> kraus_;
};

DensityOperator apply_channel(const KrausChannel& channel, const DensityOperator& rho);

/// W_{Λ(ρ)} evaluated Kraus term by Kraus term through the sum form
/// (1/2N) Σ_n Σ_i ⟨q−n|V_iρV_i*|n⟩ e^{iπp(2n−q)/N}.
WignerTable channel_wigner(const KrausChannel& channel, const DensityOperator& rho);

/// Z_{αβ} = N tr(Â(α) U Â(β) U*), a 4N²×4N² real matrix over flat indices
/// q·2N + p.
class PhasePropagator {
 public:
  PhasePropagator(int n, RealMatrix z);

  int n() const { return n_; }
  const RealMatrix& matrix() const { return z_; }
  double entry(const PhasePoint& a, const PhasePoint& b) const { return z_(flat_index(a), flat_index(b)); }

  /// W'(α) = Σ_β Z_{αβ} W(β), applied `steps` times.
  WignerTable apply(const WignerTable& table, int steps = 1) const;

 private:
  int n_;
  RealMatrix z_;
};

/// Envelope for dense propagator construction.
inline constexpr int kMaxPropagatorDim = 16;

/// Throws NotUnitary / OddDimension / InvalidArgument (N above the envelope).
PhasePropagator unitary_propagator(const UnitaryMatrix& u);

/// Σ_{α,β,γ∈G_2N} Z_{α'α} Z_{β'β} Z_{γ'γ} Γ(α,β,γ).
Complex propagated_gamma(const PhasePropagator& z, const PointOperatorGrid& ops, const PhasePoint& a,
                         const PhasePoint& b, const PhasePoint& c);

/// G = F∘Λ∘F⁻¹ with Kraus operators F V_i F*.
KrausChannel fourier_conjugate_channel(const KrausChannel& channel, const UnitaryMatrix& f);

/// ρ ↦ F ρ F*.
ComplexMatrix conjugate(const UnitaryMatrix& f, const ComplexMatrix& rho);

/// S = Â(α)^{1/2} (principal root through the eigendecomposition) and
/// M_i = S V_i.
struct FanoSqrtDecomposition {
  PhasePoint alpha;
  ComplexMatrix sqrt_factor;
  std::vector<ComplexMatrix> m;
  bool psd;  // all eigenvalues of Â(α) ≥ −1e-12

  /// Σ_i tr(S V_i ρ V_i* S) equals W_{Λ(ρ)}(α) for every α.
  Complex cyclic_form(const KrausChannel& channel, const DensityOperator& rho) const;
  /// Σ_i tr(M_i ρ M_i*) equals W_{Λ(ρ)}(α) when Â(α) is PSD.
  Complex adjoint_form(const DensityOperator& rho) const;
};

FanoSqrtDecomposition fano_sqrt_decomposition(const KrausChannel& channel, const PhasePoint& alpha);

}  // namespace dwigner
