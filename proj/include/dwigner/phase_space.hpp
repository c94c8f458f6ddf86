#pragma once

// Discrete phase space on the 2N×2N lattice: shifts, Fourier and reflection
// operators, translations T̂(q,p), phase-point operators Â(α), lines and the
// three-point kernel Γ.

#include <vector>

#include "dwigner/matrix.hpp"

namespace dwigner {

/// e^{iπk/N}, with k reduced mod 2N first so roots of unity stay exact.
Complex pi_phase(long long k, int n);

/// α = (q, p) on G_2N; coordinates are reduced mod 2N on construction.
struct PhasePoint {
  PhasePoint(long long q, long long p, int n);

  int q;
  int p;
  int n;

  bool operator==(const PhasePoint&) const = default;
};

enum class GridKind { Core, Full };

/// Points of G_N (Core) or G_2N (Full), q-major then p, both ascending.
std::vector<PhasePoint> grid_points(int n, GridKind kind);

/// Row-major index q·2N + p of a point of G_2N.
inline int flat_index(const PhasePoint& a) { return a.q * 2 * a.n + a.p; }

/// Û|n⟩ = |n+1 mod N⟩.
UnitaryMatrix position_shift(int n);
/// V̂|n⟩ = e^{2πin/N}|n⟩.
UnitaryMatrix momentum_shift(int n);
/// Entry (j, k) = e^{2πijk/N}/√N; column k is the momentum ket |k⟩.
UnitaryMatrix fourier_matrix(int n);
/// R̂|n⟩ = |−n mod N⟩.
UnitaryMatrix reflection_operator(int n);

/// T̂(q,p) = Û^q V̂^p e^{iπqp/N}.
UnitaryMatrix translation_operator(long long q, long long p, int n);

struct PhasePointOperator {
  PhasePoint alpha;
  ComplexMatrix matrix;
};

/// Â(α) = (1/2N) Û^q R̂ V̂^{−p} e^{iπpq/N}, evaluated entrywise:
/// ⟨q−m|Â|m⟩ = e^{iπp(q−2m)/N} / 2N.
PhasePointOperator point_operator(const PhasePoint& alpha);

/// All 4N² phase-point operators of one dimension, built once.
class PointOperatorGrid {
 public:
  explicit PointOperatorGrid(int n);

  int n() const { return n_; }
  const ComplexMatrix& at(const PhasePoint& a) const { return ops_[flat_index(a)]; }
  const ComplexMatrix& at(long long q, long long p) const { return at(PhasePoint(q, p, n_)); }

 private:
  int n_;
  std::vector<ComplexMatrix> ops_;
};

/// Γ(α,β,γ) = tr(Â(α)Â(β)Â(γ)).
Complex gamma_kernel(const PhasePoint& a, const PhasePoint& b, const PhasePoint& c);

/// L(n1,n2,n3) = {(q,p) ∈ G_2N : n1·p − n2·q ≡ n3 (mod 2N)}.
class PhaseLine {
 public:
  PhaseLine(long long n1, long long n2, long long n3, int n);

  /// The line q = c, i.e. L(0, 1, −c).
  static PhaseLine constant_q(long long c, int n);
  /// The line p = c, i.e. L(1, 0, c).
  static PhaseLine constant_p(long long c, int n);

  bool contains(long long q, long long p) const;

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int n3() const { return n3_; }
  int n() const { return n_; }

 private:
  int n1_, n2_, n3_, n_;
};

/// Points of the line in (q, p) lexicographic order. Throws EmptyLine when
/// the congruence has no solution (e.g. L(2, 0, 1)).
std::vector<PhasePoint> line_points(const PhaseLine& line);

/// Â_L = Σ_{α∈L} Â(α).
ComplexMatrix line_projector(const PhaseLine& line);

/// (1/2N) Σ_λ T̂^λ(n1,n2) e^{iπ n3 λ/N}: the same projector expressed
/// through the translation operator of the line's direction.
ComplexMatrix line_projector_spectral(const PhaseLine& line);

}  // namespace dwigner
