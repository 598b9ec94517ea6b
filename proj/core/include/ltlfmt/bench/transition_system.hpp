#pragma once

#include <string_view>

#include "ltlfmt/formula.hpp"

namespace ltlfmt {

/// I, Tr and psi over one signature. I is first-order without next terms;
/// Tr is first-order without strong atoms.
struct TransitionSystemSpec {
    Signature signature;
    TemporalFormula init;
    TemporalFormula trans;
    TemporalFormula property;
};

/// I & G(Tr) & psi. Throws Error when I or Tr breaks its restrictions.
TemporalFormula compile_transition_system(const TransitionSystemSpec& ts);

/// Reads a `.ltlmt` file with `init:`, `trans:` and `property:` sections;
/// a missing `trans:` means true. Restriction violations are ParseErrors at
/// the offending section.
TransitionSystemSpec parse_transition_system(std::string_view text);

} // namespace ltlfmt
