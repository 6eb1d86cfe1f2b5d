#include "sepwit/witness.hpp"

#include <algorithm>
#include <cmath>

namespace sepwit {

namespace {
constexpr double kDetectGuard = 1e-10;
}

const char* to_string(CriterionSide side) {
    return side == CriterionSide::Sup ? "sup" : "inf";
}

Witness build_witness(const HermitianOperator& L, const Partition& partition,
                      const SolverConfig& cfg) {
    SolverConfig sup_cfg = cfg;
    sup_cfg.mode = SolveMode::Sup;
    MSESolutionSet report = multistart(L, partition, sup_cfg);
    const Eigen::Index d = L.dim();
    Matrix w = report.f_value * Matrix::Identity(d, d) - L.matrix();
    return Witness{HermitianOperator(L.space(), w), partition, report.f_value, L,
                   std::move(report)};
}

Verdict witness_expectation(const Witness& w, const DensityMatrix& rho) {
    if (rho.space() != w.op.space())
        throw DimensionMismatch("state space does not match the witness space");
    double value = real_trace_product(rho.matrix(), w.op.matrix());
    return Verdict{value, value < -kDetectGuard, CriterionSide::Sup};
}

Verdict criterion(const HermitianOperator& L, const DensityMatrix& rho,
                  const Partition& partition, const SolverConfig& cfg) {
    if (rho.space() != L.space())
        throw DimensionMismatch("state space does not match the operator space");
    double t = real_trace_product(rho.matrix(), L.matrix());

    SolverConfig sup_cfg = cfg;
    sup_cfg.mode = SolveMode::Sup;
    double f_sup = f_bound(L, partition, sup_cfg);
    SolverConfig inf_cfg = cfg;
    inf_cfg.mode = SolveMode::Inf;
    double f_inf = f_bound(L, partition, inf_cfg);

    double sup_margin = t - f_sup;
    double inf_margin = f_inf - t;
    bool detected = sup_margin > kDetectGuard || inf_margin > kDetectGuard;
    CriterionSide side = sup_margin >= inf_margin ? CriterionSide::Sup : CriterionSide::Inf;
    return Verdict{std::max(sup_margin, inf_margin), detected, side};
}

}  // namespace sepwit
