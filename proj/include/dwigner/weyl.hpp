#pragma once

// Clock/shift operators and the discrete Weyl operator basis of M_N(C).

#include "dwigner/matrix.hpp"

namespace dwigner::weyl {

struct WeylConfig {
  int n = 1;             // Hilbert space dimension
  double alpha_u = 0.0;  // clock phase, in [0, 1]
  double alpha_v = 0.0;  // shift phase, in [0, 1]

  void validate() const;
};

/// (n1, n2) ∈ Z_N², reduced mod N on construction.
struct GridIndex {
  GridIndex(long long n1, long long n2, int n);
  int n1;
  int n2;
};

/// σ(n, m) = n1 m2 − n2 m1.
long long symplectic_form(long long n1, long long n2, long long m1, long long m2);

/// U_N = e^{2πiα_u/N} Σ_k e^{2πik/N} |k⟩⟨k|.
UnitaryMatrix clock_operator(const WeylConfig& cfg);

/// V_N |l⟩ = e^{2πiα_v/N} |l+1 mod N⟩.
UnitaryMatrix shift_operator(const WeylConfig& cfg);

/// W_N(n) = e^{−iπ n1 n2 / N} U_N^{n1} V_N^{n2} for arbitrary integers
/// (negative powers use the adjoint). The phase is not N-periodic, so
/// W(−n) and W(−n mod N) generally differ.
UnitaryMatrix weyl_operator(const WeylConfig& cfg, long long n1, long long n2);
UnitaryMatrix weyl_operator(const WeylConfig& cfg, const GridIndex& n);

/// Coefficients c(n1, n2) = tr(W*(n) A) / N, stored as an N×N table.
ComplexMatrix weyl_expand(const WeylConfig& cfg, const ComplexMatrix& A);

/// Σ_n c(n) W(n).
ComplexMatrix weyl_resynthesize(const WeylConfig& cfg, const ComplexMatrix& coefficients);

}  // namespace dwigner::weyl
