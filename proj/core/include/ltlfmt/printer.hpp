#pragma once

#include <string>

#include "ltlfmt/formula.hpp"
#include "ltlfmt/surface.hpp"

namespace ltlfmt {

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const FoFormula& f);
std::string to_string(const TemporalFormula& f);
std::string to_string(const SurfaceFormula& f);

/// Declarations of `sig`, one per line, in the input language.
std::string print_declarations(const Signature& sig);

/// Canonical `.ltlmt` source; parse(print(f, sig)) reproduces f and sig.
std::string print(const TemporalFormula& f, const Signature& sig);

} // namespace ltlfmt
