#include "sepwit/states.hpp"

#include <cmath>

#include "sepwit/rng.hpp"

namespace sepwit {

PureState::PureState(CompositeSpace space, Vector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != space_.total_dim())
        throw DimensionMismatch("amplitude vector does not match space dimension");
    double norm = amplitudes_.norm();
    if (!(norm > 1e-14)) throw InvalidArgument("state has (near-)zero norm");
    amplitudes_ /= norm;
    amplitudes_ = fix_phase(std::move(amplitudes_));
}

DensityMatrix PureState::projector() const {
    return DensityMatrix(space_, amplitudes_ * amplitudes_.adjoint());
}

PureState ghz(int parties, int local_dim) {
    if (parties < 2) throw InvalidArgument("ghz needs at least 2 parties");
    if (local_dim < 2) throw InvalidArgument("ghz needs local dimension >= 2");
    CompositeSpace space(std::vector<int>(static_cast<size_t>(parties), local_dim));
    Vector amp = Vector::Zero(space.total_dim());
    // |k,k,...,k> sits at index k * (D - 1) / (d - 1).
    Eigen::Index repunit = (space.total_dim() - 1) / (local_dim - 1);
    double coeff = 1.0 / std::sqrt(static_cast<double>(local_dim));
    for (int k = 0; k < local_dim; ++k) amp(k * repunit) = coeff;
    return PureState(std::move(space), std::move(amp));
}

PureState w_state(int parties) {
    if (parties < 2) throw InvalidArgument("w_state needs at least 2 parties");
    CompositeSpace space(std::vector<int>(static_cast<size_t>(parties), 2));
    Vector amp = Vector::Zero(space.total_dim());
    double coeff = 1.0 / std::sqrt(static_cast<double>(parties));
    for (int j = 0; j < parties; ++j)
        amp(Eigen::Index(1) << (parties - 1 - j)) = coeff;
    return PureState(std::move(space), std::move(amp));
}

ProductVector random_product(const CompositeSpace& space, const Partition& partition,
                             std::uint64_t seed) {
    auto bd = block_dims(space, partition);
    std::vector<Vector> factors;
    factors.reserve(bd.size());
    for (size_t j = 0; j < bd.size(); ++j) {
        Rng rng(split_seed(seed, j));
        factors.push_back(rng.haar_unit(bd[j]));
    }
    return ProductVector(partition, std::move(factors));
}

DensityMatrix random_separable_density(const CompositeSpace& space, const Partition& partition,
                                       int n_terms, std::uint64_t seed) {
    if (n_terms < 1) throw InvalidArgument("n_terms must be >= 1");
    Rng weight_rng(split_seed(seed, 0));
    std::vector<double> weights(static_cast<size_t>(n_terms));
    double total = 0.0;
    for (auto& w : weights) {
        w = -std::log(1.0 - weight_rng.uniform());
        total += w;
    }
    Matrix rho = Matrix::Zero(space.total_dim(), space.total_dim());
    for (int k = 0; k < n_terms; ++k) {
        ProductVector v = random_product(space, partition,
                                         split_seed(seed, static_cast<std::uint64_t>(k) + 1));
        Vector full = to_full_vector(space, v);
        rho.noalias() += (weights[static_cast<size_t>(k)] / total) * (full * full.adjoint());
    }
    return DensityMatrix(space, rho);
}

DensityMatrix werner_mix(const PureState& psi, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgument("mixing parameter p = " + std::to_string(p) + " outside [0,1]");
    const Eigen::Index d = psi.space().total_dim();
    Matrix rho = p * (psi.amplitudes() * psi.amplitudes().adjoint());
    rho += ((1.0 - p) / static_cast<double>(d)) * Matrix::Identity(d, d);
    return DensityMatrix(psi.space(), rho);
}

}  // namespace sepwit
