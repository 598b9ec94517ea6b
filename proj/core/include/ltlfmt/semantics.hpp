#pragma once

#include <functional>
#include <optional>

#include "ltlfmt/formula.hpp"
#include "ltlfmt/trace.hpp"

namespace ltlfmt {

/// Value of `t` at position i, or nullopt when t looks past the end of the
/// trace. Throws IncompleteInterpretation for a missing constant or function
/// entry, NeedsDelegation for division by zero.
std::optional<Value> eval_term(const Term& t, const Trace& trace, std::size_t i, const Environment& env = {});

/// Satisfaction of a first-order formula at position i. Quantifiers range
/// over the interpretation's finite domain for their sort; without one this
/// throws NeedsDelegation.
bool sat_fo(const FoFormula& f, const Trace& trace, std::size_t i, const Environment& env = {});
bool sat_atom(const Atom& a, const Trace& trace, std::size_t i, const Environment& env = {});

/// Decides a first-order leaf at a position.
using LeafEvaluator = std::function<bool(const FoFormula& leaf, std::size_t i)>;

/// Satisfaction of a temporal formula at position i.
bool sat_temporal(const TemporalFormula& f, const Trace& trace, std::size_t i = 0);

/// Same, with first-order leaves decided by `leaf`.
bool sat_temporal(const TemporalFormula& f, std::size_t length, std::size_t i, const LeafEvaluator& leaf);

} // namespace ltlfmt
