#include "sepwit/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "sepwit/rng.hpp"
#include "sepwit/states.hpp"

namespace sepwit {

const char* to_string(SolveMode mode) {
    return mode == SolveMode::Sup ? "sup" : "inf";
}

SolveMode solve_mode_from_string(const std::string& text) {
    if (text == "sup") return SolveMode::Sup;
    if (text == "inf") return SolveMode::Inf;
    throw InvalidArgument("mode must be 'sup' or 'inf', got '" + text + "'");
}

void SolverConfig::validate() const {
    if (!(tol_g > 0.0)) throw InvalidArgument("tol_g must be > 0");
    if (!(tol_residual > 0.0)) throw InvalidArgument("tol_residual must be > 0");
    if (!(dedup_tol > 0.0)) throw InvalidArgument("dedup_tol must be > 0");
    if (max_iter < 1) throw InvalidArgument("max_iter must be >= 1");
    if (n_starts < 1) throw InvalidArgument("n_starts must be >= 1");
    if (enrich_starts < -1) throw InvalidArgument("enrich_starts must be >= -1");
    if (threads < 0) throw InvalidArgument("threads must be >= 0");
}

namespace {

enum class Branch { Max, Min, Nearest };

Branch branch_for(SolveMode mode) {
    return mode == SolveMode::Sup ? Branch::Max : Branch::Min;
}

// Contraction identical to reduce_operator but without per-call validation;
// factors are trusted unit vectors aligned with canonical blocks.
Matrix reduce_raw(const HermitianOperator& L, const std::vector<Vector>& factors,
                  int skip_block) {
    Matrix cur = L.matrix();
    const int k = static_cast<int>(factors.size());
    for (int j = k - 1; j > skip_block; --j) {
        const Vector& a = factors[static_cast<size_t>(j)];
        const Eigen::Index m = a.size();
        const Eigen::Index hi = cur.rows() / m;
        Matrix out = Matrix::Zero(hi, hi);
        const Vector a_conj = a.conjugate();
        for (Eigen::Index ch = 0; ch < hi; ++ch)
            for (Eigen::Index q = 0; q < m; ++q) {
                Eigen::Map<const Matrix> col(cur.data() + (ch * m + q) * cur.rows(), m, hi);
                out.col(ch).noalias() += a(q) * (col.transpose() * a_conj);
            }
        cur = std::move(out);
    }
    for (int j = 0; j < skip_block; ++j) {
        const Vector& a = factors[static_cast<size_t>(j)];
        const Eigen::Index m = a.size();
        const Eigen::Index lo = cur.rows() / m;
        Matrix out = Matrix::Zero(lo, lo);
        const Vector a_conj = a.conjugate();
        for (Eigen::Index cl = 0; cl < lo; ++cl)
            for (Eigen::Index q = 0; q < m; ++q) {
                Eigen::Map<const Matrix> col(cur.data() + (q * lo + cl) * cur.rows(), lo, m);
                out.col(cl).noalias() += a(q) * (col * a_conj);
            }
        cur = std::move(out);
    }
    return 0.5 * (cur + cur.adjoint());
}

std::pair<Vector, double> pick_eigenpair(const Matrix& reduced, const Vector& current,
                                         Branch branch) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(reduced);
    if (es.info() != Eigen::Success)
        throw EigenDecompositionFailure("eigendecomposition of the reduced operator failed");
    const auto& evals = es.eigenvalues();
    const auto& evecs = es.eigenvectors();
    const Eigen::Index n = evals.size();

    Eigen::Index cand_begin = 0, cand_end = n;  // ascending order
    if (branch != Branch::Nearest) {
        Eigen::Index ext = branch == Branch::Max ? n - 1 : 0;
        double tol = 1e-10 * std::max(1.0, std::abs(evals(ext)));
        cand_begin = ext;
        cand_end = ext + 1;
        if (branch == Branch::Max)
            while (cand_begin > 0 && std::abs(evals(cand_begin - 1) - evals(ext)) <= tol)
                --cand_begin;
        else
            while (cand_end < n && std::abs(evals(cand_end) - evals(ext)) <= tol) ++cand_end;
    }

    Eigen::Index chosen = cand_begin;
    double best_overlap = -1.0;
    for (Eigen::Index i = cand_begin; i < cand_end; ++i) {
        double overlap = std::abs(evecs.col(i).dot(current));
        if (overlap > best_overlap) {
            best_overlap = overlap;
            chosen = i;
        }
    }
    if (branch != Branch::Nearest && best_overlap < 1e-6) chosen = cand_begin;
    return {fix_phase(evecs.col(chosen)), evals(chosen)};
}

double residual_raw(const HermitianOperator& L, const std::vector<Vector>& factors, double g) {
    double worst = 0.0;
    for (int j = 0; j < static_cast<int>(factors.size()); ++j) {
        Matrix reduced = reduce_raw(L, factors, j);
        double r = (reduced * factors[static_cast<size_t>(j)] -
                    g * factors[static_cast<size_t>(j)])
                       .norm();
        worst = std::max(worst, r);
    }
    return worst;
}

MSESolution iterate_impl(const HermitianOperator& L, const ProductVector& init,
                         const SolverConfig& cfg, Branch branch) {
    std::vector<Vector> factors = init.factors();
    const int k = static_cast<int>(factors.size());

    double g_prev = expectation(L, init);
    double g_cur = g_prev;
    std::vector<double> history{g_prev};
    bool g_converged = false;
    int sweeps = 0;

    for (int sweep = 1; sweep <= cfg.max_iter; ++sweep) {
        for (int j = 0; j < k; ++j) {
            auto [vec, val] = pick_eigenpair(reduce_raw(L, factors, j),
                                             factors[static_cast<size_t>(j)], branch);
            factors[static_cast<size_t>(j)] = std::move(vec);
            g_cur = val;
        }
        history.push_back(g_cur);
        sweeps = sweep;
        if (std::abs(g_cur - g_prev) <= cfg.tol_g) {
            g_converged = true;
            break;
        }
        g_prev = g_cur;
    }

    double res = residual_raw(L, factors, g_cur);
    MSESolution sol{g_cur, ProductVector(init.partition(), std::move(factors)), res, sweeps,
                    g_converged && res <= cfg.tol_residual, std::move(history),
                    branch != Branch::Nearest};
    return sol;
}

// Deterministic ordering: by g, then lexicographically over factor entries.
bool solution_less(const MSESolution& a, const MSESolution& b) {
    if (a.g != b.g) return a.g < b.g;
    for (int j = 0; j < a.vector.factor_count(); ++j) {
        const Vector& fa = a.vector.factor(j);
        const Vector& fb = b.vector.factor(j);
        for (Eigen::Index i = 0; i < fa.size(); ++i) {
            if (fa(i).real() != fb(i).real()) return fa(i).real() < fb(i).real();
            if (fa(i).imag() != fb(i).imag()) return fa(i).imag() < fb(i).imag();
        }
    }
    return false;
}

bool same_solution(const MSESolution& a, const MSESolution& b, double tol) {
    if (std::abs(a.g - b.g) > tol) return false;
    for (int j = 0; j < a.vector.factor_count(); ++j) {
        double overlap = std::abs(a.vector.factor(j).dot(b.vector.factor(j)));
        if (overlap < 1.0 - tol) return false;
    }
    return true;
}

// Prefer converged, then smaller residual; ties keep the incumbent.
bool solution_better(const MSESolution& challenger, const MSESolution& incumbent) {
    if (challenger.converged != incumbent.converged) return challenger.converged;
    return challenger.residual < incumbent.residual;
}

}  // namespace

std::pair<Vector, double> block_update(const HermitianOperator& L, const ProductVector& v,
                                       int block_index, SolveMode mode) {
    Matrix reduced = reduce_operator(L, v, block_index);  // validates inputs
    return pick_eigenpair(reduced, v.factor(block_index), branch_for(mode));
}

MSESolution iterate(const HermitianOperator& L, const Partition& partition,
                    const ProductVector& init, const SolverConfig& cfg) {
    cfg.validate();
    if (init.partition() != partition)
        throw PartitionMismatch("init vector does not match the requested partition");
    if (!partition.is_canonical())
        throw PartitionMismatch("iterate requires canonical block order; got " +
                                partition.str());
    block_dims(L.space(), partition);  // dimension check
    return iterate_impl(L, init, cfg, branch_for(cfg.mode));
}

MSESolutionSet multistart(const HermitianOperator& L, const Partition& partition,
                          const SolverConfig& cfg) {
    cfg.validate();
    CanonicalForm cf = canonicalize(L, partition);

    const int n_main = cfg.n_starts;
    const int n_enrich = cfg.effective_enrich_starts();
    const int total = n_main + n_enrich;

    std::vector<std::optional<MSESolution>> slots(static_cast<size_t>(total));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= total) return;
            try {
                ProductVector init = random_product(cf.op.space(), cf.partition,
                                                    split_seed(cfg.seed,
                                                               static_cast<std::uint64_t>(i)));
                Branch branch = i < n_main ? branch_for(cfg.mode) : Branch::Nearest;
                slots[static_cast<size_t>(i)] = iterate_impl(cf.op, init, cfg, branch);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    int n_threads = cfg.threads == 0
                        ? static_cast<int>(std::thread::hardware_concurrency())
                        : cfg.threads;
    n_threads = std::clamp(n_threads, 1, total);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<MSESolution> all;
    all.reserve(static_cast<size_t>(total));
    for (auto& slot : slots)
        if (slot) all.push_back(std::move(*slot));
    std::sort(all.begin(), all.end(), solution_less);

    std::vector<MSESolution> kept;
    for (auto& sol : all) {
        bool merged = false;
        for (auto& rep : kept) {
            if (same_solution(sol, rep, cfg.dedup_tol)) {
                if (solution_better(sol, rep)) rep = std::move(sol);
                merged = true;
                break;
            }
        }
        if (!merged) kept.push_back(std::move(sol));
    }
    std::sort(kept.begin(), kept.end(), solution_less);

    bool any_converged = false;
    double f = 0.0;
    for (const auto& sol : kept) {
        if (!sol.converged) continue;
        if (!any_converged) {
            f = sol.g;
            any_converged = true;
        } else {
            f = cfg.mode == SolveMode::Sup ? std::max(f, sol.g) : std::min(f, sol.g);
        }
    }
    if (!any_converged)
        throw NoConvergedSolution("no multistart run converged (" + std::to_string(total) +
                                  " starts)");

    return MSESolutionSet{std::move(kept), f, cfg.mode, cf.partition, cf.permutation};
}

double residual(const HermitianOperator& L, const Partition& partition, const MSESolution& sol) {
    if (sol.vector.partition() != partition)
        throw PartitionMismatch("solution vector does not match the requested partition");
    block_dims(L.space(), partition);
    if (!partition.is_canonical())
        throw PartitionMismatch("residual requires canonical block order");
    return residual_raw(L, sol.vector.factors(), sol.g);
}

double f_bound(const HermitianOperator& L, const Partition& partition, const SolverConfig& cfg) {
    return multistart(L, partition, cfg).f_value;
}

}  // namespace sepwit
