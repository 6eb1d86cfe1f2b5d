#pragma once

#include <cstdint>

#include "sepwit/hilbert.hpp"

namespace sepwit {

// Normalized pure state on a composite space, phase-fixed like a factor.
class PureState {
public:
    PureState(CompositeSpace space, Vector amplitudes);

    const CompositeSpace& space() const { return space_; }
    const Vector& amplitudes() const { return amplitudes_; }

    DensityMatrix projector() const;

private:
    CompositeSpace space_;
    Vector amplitudes_;
};

// (1/sqrt(d)) sum_k |k>^(x)n on n qudits of local dimension d.
PureState ghz(int parties, int local_dim = 2);

// (1/sqrt(n)) sum_j |0...1_j...0> on n qubits.
PureState w_state(int parties);

// Factor-wise Haar-random product vector; factor j uses stream split_seed(seed, j).
ProductVector random_product(const CompositeSpace& space, const Partition& partition,
                             std::uint64_t seed);

// Classical mixture sum_k p_k |a_k><a_k| of n_terms seeded product states with
// Dirichlet(1,...,1) weights. Stream 0 draws the weights, stream k >= 1 seeds
// term k's product vector.
DensityMatrix random_separable_density(const CompositeSpace& space, const Partition& partition,
                                       int n_terms, std::uint64_t seed);

// p |psi><psi| + (1 - p) 1/D.
DensityMatrix werner_mix(const PureState& psi, double p);

}  // namespace sepwit
