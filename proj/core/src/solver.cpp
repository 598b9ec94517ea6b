#include "ltlfmt/solver.hpp"

#include "ltlfmt/encoder/encoder.hpp"
#include "ltlfmt/flatten.hpp"
#include "ltlfmt/model.hpp"
#include "ltlfmt/smt/logic.hpp"
#include "ltlfmt/tableau.hpp"

namespace ltlfmt {

namespace {

std::string unknown_reason(const smt::CheckResult& r)
{
    return r.reason == "timeout" ? "timeout" : "backend-unknown: " + r.reason;
}

SolveOutcome run_encoding(const TemporalFormula& phi, const Signature& sig, const SolveOptions& opts)
{
    Encoder encoder(phi);
    smt::SolverConfig cfg = opts.backend;
    if (cfg.logic.empty())
        cfg.logic = smt::infer_logic(phi, sig);
    smt::Session session(cfg, sig);

    SolveOutcome out;
    auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] { return opts.time_budget.count() > 0 && std::chrono::steady_clock::now() - start > opts.time_budget; };
    session.assert_formula(encoder.unravel_base());
    for (std::size_t k = 0;; ++k) {
        if (opts.max_k != 0 && k > opts.max_k) {
            out.status = SolveStatus::Unknown;
            out.reason = "bound-exhausted";
            out.k = opts.max_k;
            break;
        }
        if (out_of_time()) {
            out.reason = "timeout";
            out.k = k == 0 ? 0 : k - 1;
            break;
        }
        out.k = k;
        auto r = session.check();
        if (r.status == smt::CheckStatus::Unknown) {
            out.reason = unknown_reason(r);
            break;
        }
        if (r.status == smt::CheckStatus::Unsat) {
            out.status = SolveStatus::Unsat;
            break;
        }
        session.push();
        session.assert_formula(encoder.empty_encoding(k));
        r = session.check();
        if (r.status == smt::CheckStatus::Unknown) {
            out.reason = unknown_reason(r);
            break;
        }
        if (r.status == smt::CheckStatus::Sat) {
            out.status = SolveStatus::Sat;
            out.trace = extract_trace(session, sig, k);
            break;
        }
        session.pop();
        session.assert_formula(encoder.unravel_delta(k));
    }
    out.checks = session.checks();
    return out;
}

SolveOutcome run_tableau(const TemporalFormula& phi, const Signature& sig, const SolveOptions& opts)
{
    Tableau tableau(phi, sig);
    TableauOptions topts;
    topts.max_poised = opts.max_k == 0 ? 0 : opts.max_k + 1;
    topts.backend = opts.backend;
    topts.dot_path = opts.dot_path;
    auto r = tableau.search(topts);

    SolveOutcome out;
    out.k = r.k;
    out.trace = std::move(r.trace);
    out.reason = r.reason;
    out.checks = r.checks;
    switch (r.status) {
    case TableauResult::Status::Sat:
        out.status = SolveStatus::Sat;
        break;
    case TableauResult::Status::Unsat:
        out.status = SolveStatus::Unsat;
        break;
    case TableauResult::Status::Unknown:
        out.status = SolveStatus::Unknown;
        break;
    }
    return out;
}

} // namespace

std::string to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Sat:
        return "SAT";
    case SolveStatus::Unsat:
        return "UNSAT";
    case SolveStatus::Unknown:
        return "UNKNOWN";
    }
    return "?";
}

SolveOutcome solve(const TemporalFormula& phi, const Signature& sig, const SolveOptions& opts)
{
    Signature flat_sig = sig;
    TemporalFormula flat = flatten_next(phi, flat_sig);

    SolveOutcome out;
    switch (opts.engine) {
    case Engine::Encoding:
        out = run_encoding(flat, flat_sig, opts);
        break;
    case Engine::Tableau:
        out = run_tableau(flat, flat_sig, opts);
        break;
    case Engine::Both: {
        out = run_encoding(flat, flat_sig, opts);
        auto other = run_tableau(flat, flat_sig, opts);
        bool agree = out.status == other.status && (out.status == SolveStatus::Unknown || out.k == other.k);
        if (!agree)
            out.divergence = "encoding says " + to_string(out.status) + " at k=" + std::to_string(out.k)
                + ", tableau says " + to_string(other.status) + " at k=" + std::to_string(other.k);
        break;
    }
    }

    if (out.trace) {
        *out.trace = project(*out.trace, [&](const std::string& name) { return sig.var_sort(name).has_value(); });
        if (opts.verify_witness)
            out.verification = verify_witness(*out.trace, phi, sig, opts.backend);
    }
    return out;
}

} // namespace ltlfmt
