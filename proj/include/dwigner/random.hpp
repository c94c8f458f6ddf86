#pragma once

// Seeded generators for test states, unitaries and channels. Every draw comes
// from the caller's engine; nothing reads OS entropy or the clock.

#include <cstdint>
#include <random>

#include "dwigner/channels.hpp"
#include "dwigner/matrix.hpp"

namespace dwigner::random {

using Engine = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix gaussian_matrix(int rows, int cols, Engine& rng);

/// G G* / tr(G G*).
DensityOperator random_density(int n, Engine& rng);

/// Rank-one state from a normalized Gaussian vector.
DensityOperator random_pure(int n, Engine& rng);

/// QR of a Gaussian matrix with the phases of R's diagonal divided out.
UnitaryMatrix random_unitary(int n, Engine& rng);

/// B_i (Σ B_j* B_j)^{−1/2} for Gaussian B_i.
KrausChannel random_channel(int n, int terms, Engine& rng);

/// Column-stochastic matrix with uniform entries normalized per column.
RealMatrix random_stochastic(int n, Engine& rng);

}  // namespace dwigner::random
