#pragma once

#include <string>

#include "ltlfmt/formula.hpp"
#include "ltlfmt/smt/session.hpp"
#include "ltlfmt/trace.hpp"

namespace ltlfmt {

enum class Verdict { Valid, Invalid, Unknown };

std::string to_string(Verdict v);

struct WitnessReport {
    Verdict verdict = Verdict::Unknown;
    std::string detail;
    /// First-order leaves that needed an SMT query.
    std::size_t delegated = 0;
};

/// Checks sigma,0 |= phi. First-order leaves are evaluated directly where
/// possible; quantified leaves and leaves that need interpretation entries
/// the trace lacks are decided by an SMT query that fixes the state values,
/// the step literal and the known interpretation. A leaf the query cannot
/// decide, or a solver `unknown`, makes the verdict Unknown.
WitnessReport verify_witness(const Trace& trace, const TemporalFormula& phi, const Signature& sig,
                             const smt::SolverConfig& backend);

} // namespace ltlfmt
