#pragma once

#include "ltlfmt/smt/session.hpp"
#include "ltlfmt/trace.hpp"

namespace ltlfmt {

/// Reads a trace of length k+1 off the current model: state i assigns x the
/// value of `x@i`. Variables the model leaves open get default_value() and
/// set model_incomplete. The interpretation holds every constant and every
/// ground application occurring in the session's assertions.
Trace extract_trace(smt::Session& session, const Signature& sig, std::size_t k);

} // namespace ltlfmt
