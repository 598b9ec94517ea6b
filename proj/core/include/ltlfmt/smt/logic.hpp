#pragma once

#include <string>

#include "ltlfmt/formula.hpp"

namespace ltlfmt::smt {

/// SMT-LIB logic for encodings of `phi`: "ALL" with quantifiers, otherwise
/// QF_ followed by UF when functions, predicates or uninterpreted sorts
/// occur, and LIA/LRA/LIRA (NIA/NRA/NIRA with division by a non-literal)
/// after the numeric sorts in use. A purely propositional formula gets QF_UF.
std::string infer_logic(const TemporalFormula& phi, const Signature& sig);

} // namespace ltlfmt::smt
