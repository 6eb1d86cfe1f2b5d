#pragma once

#include "sepwit/solver.hpp"

namespace sepwit {

// Entanglement witness W = f_sup(L) 1 - L for one partition, together with
// the solver report that produced f_sup (the audit trail behind any verdict).
struct Witness {
    HermitianOperator op;
    Partition partition;
    double f_sup;
    HermitianOperator source;
    MSESolutionSet solver_report;
};

enum class CriterionSide { Sup, Inf };

const char* to_string(CriterionSide side);

struct Verdict {
    double value = 0.0;  // tr(rho W), or the criterion margin
    bool detected = false;
    CriterionSide side = CriterionSide::Sup;
};

Witness build_witness(const HermitianOperator& L, const Partition& partition,
                      const SolverConfig& cfg);

// tr(rho W); detected iff the value is below -1e-10 (boundary states count as
// not detected).
Verdict witness_expectation(const Witness& w, const DensityMatrix& rho);

// Two-sided criterion: detected iff tr(rho L) exceeds f_sup or undercuts
// f_inf beyond the 1e-10 guard; value is the larger margin.
Verdict criterion(const HermitianOperator& L, const DensityMatrix& rho,
                  const Partition& partition, const SolverConfig& cfg);

}  // namespace sepwit
