#pragma once

#include "ltlfmt/formula.hpp"

namespace ltlfmt {

/// Rewrites next/wnext applied to anything but a state variable into the
/// flat fragment, declaring fresh `_flat<n>` state variables in `sig`.
///
/// For a nested operand t a fresh y is tied to t by G(y = t') where t' is t
/// with next weakened to wnext, and next(t) becomes next(y). Atoms whose
/// next-nesting depth d exceeds one are additionally guarded by a fresh
/// counter r of remaining states (r = 0 at the last state): strong atoms
/// become (r >= d) & a, weak ones (r < d) | a. The result is equisatisfiable
/// with the input, and any model of it restricted to the original variables
/// is a model of the input.
///
/// Throws ScopeError if next/wnext wraps a term mentioning a bound variable.
TemporalFormula flatten_next(const TemporalFormula& f, Signature& sig);

/// True when every next/wnext node wraps a state variable.
bool is_flat(const TemporalFormula& f);
bool is_flat(const Term& t);

} // namespace ltlfmt
