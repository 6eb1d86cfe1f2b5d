#include "sepwit/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>

namespace sepwit {

namespace {

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Hermiticity deviation relative to the largest entry.
double hermiticity_deviation(const Matrix& m) {
    double scale = std::max(max_abs(m), 1e-300);
    return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

CompositeSpace::CompositeSpace(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw InvalidArgument("composite space needs at least one subsystem");
    total_dim_ = 1;
    for (int d : dims_) {
        if (d < 2) throw InvalidArgument("subsystem dimension must be >= 2");
        total_dim_ *= d;
    }
}

int CompositeSpace::dim(int subsystem) const {
    if (subsystem < 0 || subsystem >= subsystem_count())
        throw IndexOutOfRange("subsystem index out of range");
    return dims_[static_cast<size_t>(subsystem)];
}

Eigen::Index CompositeSpace::block_dim(const std::vector<int>& indices) const {
    Eigen::Index d = 1;
    for (int i : indices) d *= dim(i);
    return d;
}

HermitianOperator::HermitianOperator(CompositeSpace space, const Matrix& entries)
    : space_(std::move(space)) {
    if (entries.rows() != space_.total_dim() || entries.cols() != space_.total_dim())
        throw DimensionMismatch("matrix is " + std::to_string(entries.rows()) + "x" +
                                std::to_string(entries.cols()) + ", space has total dim " +
                                std::to_string(space_.total_dim()));
    double dev = hermiticity_deviation(entries);
    if (dev > 1e-8)
        throw NotHermitian("relative Hermiticity deviation " + std::to_string(dev) +
                           " exceeds 1e-8");
    matrix_ = 0.5 * (entries + entries.adjoint());
}

Vector fix_phase(Vector v) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double mag = std::abs(v(i));
        if (mag > best) {
            best = mag;
            arg = i;
        }
    }
    if (best <= 0.0) return v;
    cdouble z = v(arg);
    v *= std::conj(z) / std::abs(z);
    v(arg) = cdouble(std::abs(v(arg)), 0.0);  // clear rounding residue
    return v;
}

ProductVector::ProductVector(Partition partition, std::vector<Vector> factors)
    : partition_(std::move(partition)), factors_(std::move(factors)) {
    if (static_cast<int>(factors_.size()) != partition_.block_count())
        throw PartitionMismatch("got " + std::to_string(factors_.size()) +
                                " factors for " + std::to_string(partition_.block_count()) +
                                " blocks");
    for (auto& f : factors_) {
        double norm = f.norm();
        if (!(norm > 1e-14)) throw InvalidArgument("factor has (near-)zero norm");
        f /= norm;
        f = fix_phase(std::move(f));
    }
}

const Vector& ProductVector::factor(int j) const {
    if (j < 0 || j >= factor_count())
        throw IndexOutOfRange("factor index " + std::to_string(j) + " out of range");
    return factors_[static_cast<size_t>(j)];
}

DensityMatrix::DensityMatrix(CompositeSpace space, const Matrix& entries)
    : space_(std::move(space)) {
    if (entries.rows() != space_.total_dim() || entries.cols() != space_.total_dim())
        throw DimensionMismatch("density matrix does not match space dimension");
    if (hermiticity_deviation(entries) > 1e-8)
        throw NotHermitian("density matrix is not Hermitian");
    matrix_ = 0.5 * (entries + entries.adjoint());
    double trace = matrix_.trace().real();
    if (std::abs(trace - 1.0) > 1e-10)
        throw InvalidArgument("density matrix trace " + std::to_string(trace) + " != 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw EigenDecompositionFailure("positivity check failed to converge");
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw InvalidArgument("density matrix has eigenvalue " +
                              std::to_string(es.eigenvalues().minCoeff()) + " < -1e-10");
}

HermitianOperator make_operator(const CompositeSpace& space, const Matrix& entries) {
    return HermitianOperator(space, entries);
}

HermitianOperator tensor_product(const std::vector<HermitianOperator>& ops) {
    if (ops.empty()) throw InvalidArgument("tensor_product needs at least one operator");
    Matrix acc = ops.front().matrix();
    std::vector<int> dims = ops.front().space().dims();
    for (size_t k = 1; k < ops.size(); ++k) {
        acc = Eigen::kroneckerProduct(acc, ops[k].matrix()).eval();
        const auto& d = ops[k].space().dims();
        dims.insert(dims.end(), d.begin(), d.end());
    }
    return HermitianOperator(CompositeSpace(std::move(dims)), acc);
}

std::vector<Eigen::Index> block_dims(const CompositeSpace& space, const Partition& p) {
    if (p.subsystem_count() != space.subsystem_count())
        throw PartitionMismatch("partition covers " + std::to_string(p.subsystem_count()) +
                                " subsystems, space has " +
                                std::to_string(space.subsystem_count()));
    std::vector<Eigen::Index> out;
    out.reserve(static_cast<size_t>(p.block_count()));
    for (const auto& block : p.blocks()) out.push_back(space.block_dim(block));
    return out;
}

namespace {

void check_product_vector(const CompositeSpace& space, const ProductVector& v) {
    auto bd = block_dims(space, v.partition());
    for (int j = 0; j < v.factor_count(); ++j)
        if (v.factor(j).size() != bd[static_cast<size_t>(j)])
            throw PartitionMismatch("factor " + std::to_string(j + 1) + " has dim " +
                                    std::to_string(v.factor(j).size()) + ", block needs " +
                                    std::to_string(bd[static_cast<size_t>(j)]));
}

}  // namespace

Vector to_full_vector(const CompositeSpace& space, const ProductVector& v) {
    check_product_vector(space, v);
    const int n = space.subsystem_count();
    const Eigen::Index total = space.total_dim();

    // Global stride of each subsystem (subsystem 0 slowest).
    std::vector<Eigen::Index> stride(static_cast<size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i)
        stride[static_cast<size_t>(i)] =
            stride[static_cast<size_t>(i + 1)] * space.dim(i + 1);

    // Factor-internal stride of each subsystem (members ascend within a block).
    std::vector<Eigen::Index> fstride(static_cast<size_t>(n), 0);
    std::vector<int> owner(static_cast<size_t>(n), 0);
    for (int j = 0; j < v.partition().block_count(); ++j) {
        const auto& block = v.partition().block(j);
        Eigen::Index s = 1;
        for (int t = static_cast<int>(block.size()) - 1; t >= 0; --t) {
            int sub = block[static_cast<size_t>(t)];
            fstride[static_cast<size_t>(sub)] = s;
            owner[static_cast<size_t>(sub)] = j;
            s *= space.dim(sub);
        }
    }

    const int k = v.factor_count();
    std::vector<Eigen::Index> fidx(static_cast<size_t>(k));
    Vector full(total);
    for (Eigen::Index r = 0; r < total; ++r) {
        std::fill(fidx.begin(), fidx.end(), 0);
        for (int i = 0; i < n; ++i) {
            Eigen::Index digit = (r / stride[static_cast<size_t>(i)]) % space.dim(i);
            fidx[static_cast<size_t>(owner[static_cast<size_t>(i)])] +=
                digit * fstride[static_cast<size_t>(i)];
        }
        cdouble amp(1.0, 0.0);
        for (int j = 0; j < k; ++j) amp *= v.factor(j)(fidx[static_cast<size_t>(j)]);
        full(r) = amp;
    }
    return full;
}

namespace {

// <a| . |a> contraction of the trailing (fastest-index) block of size m:
// out(rh, ch) = sum_{p,q} conj(a_p) M(rh*m+p, ch*m+q) a_q.
Matrix contract_trailing(const Matrix& m_in, const Vector& a) {
    const Eigen::Index m = a.size();
    const Eigen::Index hi = m_in.rows() / m;
    Matrix out = Matrix::Zero(hi, hi);
    const Vector a_conj = a.conjugate();
    for (Eigen::Index ch = 0; ch < hi; ++ch) {
        for (Eigen::Index q = 0; q < m; ++q) {
            Eigen::Map<const Matrix> col(m_in.data() + (ch * m + q) * m_in.rows(), m, hi);
            out.col(ch).noalias() += a(q) * (col.transpose() * a_conj);
        }
    }
    return out;
}

// Same for the leading (slowest-index) block:
// out(rl, cl) = sum_{p,q} conj(a_p) M(p*lo+rl, q*lo+cl) a_q.
Matrix contract_leading(const Matrix& m_in, const Vector& a) {
    const Eigen::Index m = a.size();
    const Eigen::Index lo = m_in.rows() / m;
    Matrix out = Matrix::Zero(lo, lo);
    const Vector a_conj = a.conjugate();
    for (Eigen::Index cl = 0; cl < lo; ++cl) {
        for (Eigen::Index q = 0; q < m; ++q) {
            Eigen::Map<const Matrix> col(m_in.data() + (q * lo + cl) * m_in.rows(), lo, m);
            out.col(cl).noalias() += a(q) * (col * a_conj);
        }
    }
    return out;
}

}  // namespace

Matrix reduce_operator(const HermitianOperator& L, const ProductVector& v, int skip_block) {
    if (!v.partition().is_canonical())
        throw PartitionMismatch("reduce_operator requires canonical block order; got " +
                                v.partition().str());
    check_product_vector(L.space(), v);
    const int k = v.factor_count();
    if (skip_block < 0 || skip_block >= k)
        throw IndexOutOfRange("skip block " + std::to_string(skip_block) + " out of range");

    Matrix cur = L.matrix();
    for (int j = k - 1; j > skip_block; --j) cur = contract_trailing(cur, v.factor(j));
    for (int j = 0; j < skip_block; ++j) cur = contract_leading(cur, v.factor(j));
    // Exact in real arithmetic; symmetrize away the rounding residue.
    return 0.5 * (cur + cur.adjoint());
}

double expectation(const HermitianOperator& L, const ProductVector& v) {
    Vector full = to_full_vector(L.space(), v);
    cdouble val = full.dot(L.matrix() * full);
    if (std::abs(val.imag()) > 1e-10)
        throw NotHermitian("expectation has imaginary part " + std::to_string(val.imag()));
    return val.real();
}

double real_trace_product(const Matrix& rho, const Matrix& a) {
    if (rho.rows() != a.rows() || rho.cols() != a.cols())
        throw DimensionMismatch("trace product of mismatched matrices");
    cdouble val = (rho.transpose().array() * a.array()).sum();
    if (std::abs(val.imag()) > 1e-10)
        throw NotHermitian("trace product has imaginary part " + std::to_string(val.imag()));
    return val.real();
}

CanonicalForm canonicalize(const HermitianOperator& L, const Partition& p) {
    const CompositeSpace& space = L.space();
    if (p.subsystem_count() != space.subsystem_count())
        throw InvalidPartition("partition does not cover the operator's space");
    const int n = space.subsystem_count();

    // Blocks ordered by smallest element, members ascending: that is the one
    // ordering satisfying the contiguous-ascending-runs rule.
    std::vector<int> order(static_cast<size_t>(p.block_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return p.block(a).front() < p.block(b).front();
    });

    std::vector<int> perm;
    perm.reserve(static_cast<size_t>(n));
    std::vector<std::vector<int>> new_blocks;
    int next = 0;
    for (int j : order) {
        std::vector<int> nb;
        for (int idx : p.block(j)) {
            perm.push_back(idx);
            nb.push_back(next++);
        }
        new_blocks.push_back(std::move(nb));
    }

    std::vector<int> new_dims(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        new_dims[static_cast<size_t>(k)] = space.dim(perm[static_cast<size_t>(k)]);

    std::vector<Eigen::Index> old_stride(static_cast<size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i)
        old_stride[static_cast<size_t>(i)] =
            old_stride[static_cast<size_t>(i + 1)] * space.dim(i + 1);

    const Eigen::Index total = space.total_dim();
    std::vector<Eigen::Index> rowmap(static_cast<size_t>(total));
    for (Eigen::Index r = 0; r < total; ++r) {
        Eigen::Index rest = r;
        Eigen::Index old_index = 0;
        for (int k = n - 1; k >= 0; --k) {
            Eigen::Index d = new_dims[static_cast<size_t>(k)];
            Eigen::Index digit = rest % d;
            rest /= d;
            old_index += digit * old_stride[static_cast<size_t>(perm[static_cast<size_t>(k)])];
        }
        rowmap[static_cast<size_t>(r)] = old_index;
    }

    const Matrix& src = L.matrix();
    Matrix dst(total, total);
    for (Eigen::Index c = 0; c < total; ++c)
        for (Eigen::Index r = 0; r < total; ++r)
            dst(r, c) = src(rowmap[static_cast<size_t>(r)], rowmap[static_cast<size_t>(c)]);

    return CanonicalForm{HermitianOperator(CompositeSpace(std::move(new_dims)), dst),
                         Partition(std::move(new_blocks), n), std::move(perm)};
}

}  // namespace sepwit
