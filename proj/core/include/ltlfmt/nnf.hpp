#pragma once

#include "ltlfmt/formula.hpp"
#include "ltlfmt/surface.hpp"

namespace ltlfmt {

/// Pushes negation down to atoms and eliminates implication, using the
/// finite-trace dualities X/wX, U/R and the quantifier dualities.
/// Throws ScopeError when a temporal operator occurs under a quantifier.
TemporalFormula to_nnf(const SurfaceFormula& f);

/// Embeds an NNF formula back into the surface syntax (identity on meaning).
SurfaceFormula to_surface(const TemporalFormula& f);
SurfaceFormula to_surface(const FoFormula& f);

} // namespace ltlfmt
