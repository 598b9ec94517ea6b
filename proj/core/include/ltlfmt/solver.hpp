#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "ltlfmt/formula.hpp"
#include "ltlfmt/smt/session.hpp"
#include "ltlfmt/trace.hpp"
#include "ltlfmt/witness.hpp"

namespace ltlfmt {

enum class Engine { Encoding, Tableau, Both };

struct SolveOptions {
    /// Largest unraveling depth tried; 0 means no bound.
    std::size_t max_k = 300;
    /// An empty logic is inferred from the formula.
    smt::SolverConfig backend;
    bool verify_witness = false;
    Engine engine = Engine::Encoding;
    /// DOT dump of the tableau's last iteration (tableau engine only).
    std::string dot_path;
    /// Wall-clock budget for the encoding loop, checked between checks;
    /// 0 means none.
    std::chrono::milliseconds time_budget{0};
};

enum class SolveStatus { Sat, Unsat, Unknown };

std::string to_string(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unknown;
    /// Depth at which the answer was found; for Unknown the last depth tried.
    std::size_t k = 0;
    /// Sat only: k+1 states over the caller's variables.
    std::optional<Trace> trace;
    /// Unknown only: "bound-exhausted", "timeout" or "backend-unknown: <why>".
    std::string reason;
    /// Set when verification was requested and a trace exists.
    std::optional<WitnessReport> verification;
    /// Engine::Both: description of a disagreement between the engines.
    std::optional<std::string> divergence;
    std::size_t checks = 0;
};

/// Algorithm 1 over the incremental encoding (or the reference tableau).
/// Non-flat input is flattened first; the returned trace is projected back
/// onto the variables of `sig`.
SolveOutcome solve(const TemporalFormula& phi, const Signature& sig, const SolveOptions& opts = {});

} // namespace ltlfmt
