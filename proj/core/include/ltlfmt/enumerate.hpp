#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ltlfmt/formula.hpp"
#include "ltlfmt/trace.hpp"

namespace ltlfmt {

using FiniteDomains = std::map<Sort, std::vector<Value>>;

/// The integers lo..hi as values.
std::vector<Value> int_range(long lo, long hi);

/// Brute-force model search. Every sort used by the signature needs an entry
/// in `domains`; quantifiers range over the same sets. Traces are visited by
/// length, then interpretation, then states in lexicographic order, so the
/// first hit is a shortest model. Interpretations cover only the symbols
/// occurring in `f`.
///
/// Throws Error when the candidate count exceeds `cap`.
std::optional<Trace> enumerate_sat(const TemporalFormula& f, const Signature& sig, const FiniteDomains& domains,
                                   std::size_t max_len, std::size_t cap = 50'000'000);

} // namespace ltlfmt
