#pragma once

#include <vector>

#include "sepwit/common.hpp"
#include "sepwit/partition.hpp"

namespace sepwit {

// Composite Hilbert space H_1 (x) ... (x) H_N, represented by the list of
// per-subsystem dimensions. Basis order everywhere is lexicographic over the
// subsystem indices with subsystem 1 slowest, matrices row-major in JSON.
class CompositeSpace {
public:
    explicit CompositeSpace(std::vector<int> dims);

    int subsystem_count() const { return static_cast<int>(dims_.size()); }
    int dim(int subsystem) const;
    const std::vector<int>& dims() const { return dims_; }
    Eigen::Index total_dim() const { return total_dim_; }

    // Product of the dims selected by `indices` (0-based).
    Eigen::Index block_dim(const std::vector<int>& indices) const;

    bool operator==(const CompositeSpace& other) const { return dims_ == other.dims_; }
    bool operator!=(const CompositeSpace& other) const { return !(*this == other); }

private:
    std::vector<int> dims_;
    Eigen::Index total_dim_;
};

// Dense Hermitian operator on a composite space. Construction symmetrizes
// (M + M^dagger)/2 when the deviation is at most 1e-8 * max|entry| and
// rejects anything worse.
class HermitianOperator {
public:
    HermitianOperator(CompositeSpace space, const Matrix& entries);

    const CompositeSpace& space() const { return space_; }
    const Matrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    CompositeSpace space_;
    Matrix matrix_;
};

// Normalized product vector |a_1,...,a_K> aligned with a partition. Factors
// are normalized on construction and phase-fixed: in each factor the first
// component of largest modulus is made real and non-negative.
class ProductVector {
public:
    ProductVector(Partition partition, std::vector<Vector> factors);

    const Partition& partition() const { return partition_; }
    int factor_count() const { return static_cast<int>(factors_.size()); }
    const Vector& factor(int j) const;
    const std::vector<Vector>& factors() const { return factors_; }

private:
    Partition partition_;
    std::vector<Vector> factors_;
};

// Density matrix: Hermitian, unit trace within 1e-10, eigenvalues >= -1e-10.
class DensityMatrix {
public:
    DensityMatrix(CompositeSpace space, const Matrix& entries);

    const CompositeSpace& space() const { return space_; }
    const Matrix& matrix() const { return matrix_; }

private:
    CompositeSpace space_;
    Matrix matrix_;
};

// Multiplies the factor by a unit phase so its first largest-modulus entry is
// real and non-negative.
Vector fix_phase(Vector v);

HermitianOperator make_operator(const CompositeSpace& space, const Matrix& entries);

// Kronecker product in the fixed subsystem order; space dims concatenate.
HermitianOperator tensor_product(const std::vector<HermitianOperator>& ops);

// Assembles the full total_dim vector of a product vector. Supports arbitrary
// (not necessarily canonical) partitions by scattering each factor over the
// digit positions of its block.
Vector to_full_vector(const CompositeSpace& space, const ProductVector& v);

// Reduced operator L_{a_1,...,a_{j-1},a_{j+1},...,a_K}: L contracted on both
// sides with every factor except `skip_block`, identity left on that block.
// Requires canonical (contiguous ascending) block order; 0-based skip index.
Matrix reduce_operator(const HermitianOperator& L, const ProductVector& v, int skip_block);

// <a_1,...,a_K| L |a_1,...,a_K>. Works for any valid partition of L's space.
double expectation(const HermitianOperator& L, const ProductVector& v);

// tr(rho * A), real within 1e-10.
double real_trace_product(const Matrix& rho, const Matrix& a);

struct CanonicalForm {
    HermitianOperator op;        // conjugated by the subsystem permutation
    Partition partition;         // relabeled: contiguous ascending blocks
    std::vector<int> permutation;  // permutation[k] = original subsystem at new slot k (0-based)
};

// Permutes subsystems so every block is a contiguous ascending run and blocks
// appear in ascending order. Expectation values and spectra are preserved.
CanonicalForm canonicalize(const HermitianOperator& L, const Partition& p);

// Per-block dimensions of a canonical partition on the given space.
std::vector<Eigen::Index> block_dims(const CompositeSpace& space, const Partition& p);

}  // namespace sepwit
