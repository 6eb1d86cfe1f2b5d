#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "sepwit/common.hpp"

namespace sepwit {

// Reproducible randomness. mt19937_64 is bit-exact by the standard; uniforms
// use the 53-bit shift mapping and Gaussians a hand-coded Box-Muller, so no
// implementation-defined std::*_distribution enters any seeded code path.
//
// Stream splitting: independent streams derive from a master seed as
// split_seed(master, k) = splitmix64(master + (k + 1) * golden_gamma).
// Factor j of multistart start s therefore sees
// split_seed(split_seed(seed, s), j), identical on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master + (stream + 1) * 0x9E3779B97F4A7C15ULL);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * M_PI * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

    cdouble complex_gaussian() {
        double re = gaussian();
        double im = gaussian();
        return {re, im};
    }

    // Haar-random unit vector: i.i.d. complex Gaussian entries, normalized.
    Vector haar_unit(Eigen::Index dim) {
        Vector v(dim);
        double norm2 = 0.0;
        do {
            for (Eigen::Index i = 0; i < dim; ++i) v(i) = complex_gaussian();
            norm2 = v.squaredNorm();
        } while (norm2 < 1e-300);
        return v / std::sqrt(norm2);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace sepwit
