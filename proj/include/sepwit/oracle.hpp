#pragma once

#include <cstdint>

#include "sepwit/solver.hpp"

namespace sepwit {

// Brute-force certification of f bounds at small dimensions. Both searches
// evaluate feasible product states only and never touch the solver's
// fixed-point machinery, so they cannot inherit its failure modes.

// Haar sampling plus coordinate-wise polish of the best candidates
// (shrinking-step compass search in factor-coefficient space, accepted moves
// only, until a full pass improves by less than 1e-12). Guarded to
// total_dim <= 256.
double brute_force_extremum(const HermitianOperator& L, const Partition& partition,
                            SolveMode mode, int n_samples, int n_polish, std::uint64_t seed);

// Exhaustive Cartesian grid over per-qubit Bloch angles (theta in [0, pi],
// phi in [0, 2 pi), grid_steps points per angle) followed by one angle-space
// local refinement from the best grid point. All-qubit spaces with singleton
// partitions only; cost grows as grid_steps^(2N).
double grid_qubit_extremum(const HermitianOperator& L, const Partition& partition,
                           SolveMode mode, int grid_steps);

}  // namespace sepwit
