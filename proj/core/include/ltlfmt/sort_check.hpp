#pragma once

#include <string>
#include <vector>

#include "ltlfmt/formula.hpp"

namespace ltlfmt {

struct SortReport {
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

/// Checks that every symbol is declared and every term and atom is
/// well-sorted. Integer literals are accepted at Real sort.
SortReport sort_check(const TemporalFormula& f, const Signature& sig);

/// Sort-checks and returns the formula with integer literals that occur at
/// Real sort replaced by rational literals. Throws SortError on the first
/// problem, ScopeError when next/wnext mentions a bound variable.
TemporalFormula elaborate(const TemporalFormula& f, const Signature& sig);
FoFormula elaborate(const FoFormula& f, const Signature& sig);

/// Sort of a well-sorted term; `bound` supplies quantified variable sorts.
Sort sort_of(const Term& t, const Signature& sig, const std::vector<std::pair<std::string, Sort>>& bound = {});

} // namespace ltlfmt
