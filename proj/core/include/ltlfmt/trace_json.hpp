#pragma once

#include <string>
#include <string_view>

#include "ltlfmt/trace.hpp"

namespace ltlfmt {

/// {"length": n, "states": [{"x": "0"}, ...]} with exact value strings, plus
/// "model_incomplete": true when set. The interpretation is not serialized.
std::string to_json(const Trace& trace, int indent = -1);

/// Inverse of to_json(); values are parsed at the sorts declared in `sig`.
/// Throws Error on malformed input or unknown variables.
Trace trace_from_json(std::string_view text, const Signature& sig);

} // namespace ltlfmt
