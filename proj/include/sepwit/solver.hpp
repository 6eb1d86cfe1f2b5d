#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sepwit/hilbert.hpp"

namespace sepwit {

enum class SolveMode { Sup, Inf };

const char* to_string(SolveMode mode);
SolveMode solve_mode_from_string(const std::string& text);

struct SolverConfig {
    SolveMode mode = SolveMode::Sup;
    double tol_g = 1e-10;
    double tol_residual = 1e-8;
    int max_iter = 500;
    int n_starts = 64;
    std::uint64_t seed = 0;
    double dedup_tol = 1e-7;
    // Extra nearest-branch starts that make saddle-type solutions reachable
    // (the extremal update is only attracted to local optima). -1 means
    // "same as n_starts"; 0 disables enrichment.
    int enrich_starts = -1;
    // Worker threads for multistart; 0 picks hardware concurrency. Output is
    // merge-sorted and therefore identical for every thread count.
    int threads = 0;

    void validate() const;
    int effective_enrich_starts() const { return enrich_starts < 0 ? n_starts : enrich_starts; }
};

// One solution of the multipartite separability eigenvalue equations:
// reduce_operator(L, vector, j) a_j = g a_j for every block j.
struct MSESolution {
    double g = 0.0;
    ProductVector vector;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    // g after the initial state and after each sweep. Non-decreasing for
    // sup-mode runs, non-increasing for inf-mode runs.
    std::vector<double> g_history;
    // True when produced by an extremal (sup/inf) branch rule, for which the
    // monotonicity guarantee applies; false for nearest-branch enrichment.
    bool extremal_branch = true;
};

struct MSESolutionSet {
    std::vector<MSESolution> solutions;  // deduplicated, sorted by g ascending
    double f_value = 0.0;                // extremal converged g for the mode
    SolveMode mode = SolveMode::Sup;
    Partition partition;            // canonical partition the factors refer to
    std::vector<int> permutation;   // subsystem permutation applied (0-based)
};

// One step of the fixed-point form: extremal eigenpair of the reduced
// operator on block j, phase-fixed, degeneracy broken toward the current
// factor. Returns (new factor, eigenvalue).
std::pair<Vector, double> block_update(const HermitianOperator& L, const ProductVector& v,
                                       int block_index, SolveMode mode);

// Cyclic block-coordinate eigen-iteration from `init` until the per-sweep g
// change is at most cfg.tol_g, then certifies with the residual. Requires
// canonical block order.
MSESolution iterate(const HermitianOperator& L, const Partition& partition,
                    const ProductVector& init, const SolverConfig& cfg);

// Seeded multistart (canonicalizes internally): cfg.n_starts Haar starts with
// the extremal update plus enrichment starts with the nearest-branch update,
// merged and deduplicated deterministically. Throws NoConvergedSolution when
// no start converges.
MSESolutionSet multistart(const HermitianOperator& L, const Partition& partition,
                          const SolverConfig& cfg);

// max_j || reduce_operator(L, sol.vector, j) a_j - g a_j ||_2.
double residual(const HermitianOperator& L, const Partition& partition, const MSESolution& sol);

// Extremal attainable expectation value over product states: f_sup or f_inf,
// as found by multistart.
double f_bound(const HermitianOperator& L, const Partition& partition, const SolverConfig& cfg);

}  // namespace sepwit
