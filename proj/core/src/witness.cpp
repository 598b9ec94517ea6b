#include "ltlfmt/witness.hpp"

#include <map>
#include <memory>
#include <set>

#include "ltlfmt/encoder/encoder.hpp"
#include "ltlfmt/errors.hpp"
#include "ltlfmt/printer.hpp"
#include "ltlfmt/semantics.hpp"

namespace ltlfmt {

namespace {

struct Undecided {
    std::string why;
};

GroundTerm value_term(const Value& v, const Sort& sort)
{
    if (v.is_element())
        return GroundTerm::element(v.element().sort, v.element().id);
    if (sort.kind() == Sort::Kind::Real)
        return GroundTerm::real_lit(v.number());
    return GroundTerm::int_lit(v.number());
}

GroundFormula equals(GroundTerm a, GroundTerm b) { return GroundFormula::atom(Relation::Eq, {}, {std::move(a), std::move(b)}); }

class Delegate {
public:
    Delegate(const Trace& trace, const Signature& sig, const smt::SolverConfig& backend)
        : trace_(trace), sig_(sig), backend_(backend)
    {
        backend_.logic.clear();
        backend_.transcript_path.clear();
    }

    bool decide(const FoFormula& leaf, std::size_t i)
    {
        if (!session_)
            open();
        ++queries_;
        auto claim = label_L(leaf, i);
        session_->push();
        session_->assert_formula(context(i));
        bool result = false;
        try {
            if (holds(GroundFormula::negation(claim)) == smt::CheckStatus::Unsat)
                result = true;
            else if (holds(claim) == smt::CheckStatus::Unsat)
                result = false;
            else
                throw Undecided{"the trace does not determine " + to_string(leaf) + " at position " + std::to_string(i)};
        } catch (...) {
            session_->pop();
            throw;
        }
        session_->pop();
        return result;
    }

    std::size_t queries() const { return queries_; }

private:
    smt::CheckStatus holds(const GroundFormula& f)
    {
        session_->push();
        session_->assert_formula(f);
        auto r = session_->check();
        session_->pop();
        if (r.status == smt::CheckStatus::Unknown)
            throw Undecided{"solver answered unknown (" + r.reason + ")"};
        return r.status;
    }

    void open()
    {
        session_ = std::make_unique<smt::Session>(backend_, sig_);
        std::vector<GroundFormula> facts;
        for (const auto& [name, v] : trace_.interp.constants())
            facts.push_back(equals(GroundTerm::constant(name), value_term(v, *sig_.constant_sort(name))));
        for (const auto& [name, table] : trace_.interp.functions()) {
            const auto* decl = sig_.function(name);
            if (!decl)
                continue;
            for (const auto& [args, result] : table) {
                std::vector<GroundTerm> terms;
                for (std::size_t a = 0; a < args.size(); ++a)
                    terms.push_back(value_term(args[a], decl->args[a]));
                facts.push_back(equals(GroundTerm::apply(name, std::move(terms)), value_term(result, decl->result)));
            }
        }
        for (const auto& [name, table] : trace_.interp.predicates()) {
            const auto* decl = sig_.predicate(name);
            if (!decl)
                continue;
            for (const auto& [args, result] : table) {
                std::vector<GroundTerm> terms;
                for (std::size_t a = 0; a < args.size(); ++a)
                    terms.push_back(value_term(args[a], decl->args[a]));
                auto atom = GroundFormula::atom(Relation::Predicate, name, std::move(terms));
                facts.push_back(result.boolean() ? atom : GroundFormula::negation(atom));
            }
        }
        std::map<std::string, std::set<std::size_t>> elements;
        auto note = [&](const Value& v) {
            if (v.is_element())
                elements[v.element().sort].insert(v.element().id);
        };
        for (const auto& s : trace_.states)
            for (const auto& [name, v] : s)
                note(v);
        for (const auto& [name, v] : trace_.interp.constants())
            note(v);
        for (const auto* tables : {&trace_.interp.functions(), &trace_.interp.predicates()})
            for (const auto& [name, table] : *tables)
                for (const auto& [args, result] : table) {
                    for (const auto& a : args)
                        note(a);
                    note(result);
                }
        for (const auto& [sort, ids] : elements) {
            std::vector<GroundTerm> names;
            for (auto id : ids)
                names.push_back(GroundTerm::element(sort, id));
            for (std::size_t a = 0; a < names.size(); ++a)
                for (std::size_t b = a + 1; b < names.size(); ++b)
                    facts.push_back(GroundFormula::atom(Relation::Ne, {}, {names[a], names[b]}));
        }
        session_->assert_formula(GroundFormula::conj(std::move(facts)));
    }

    GroundFormula context(std::size_t i) const
    {
        std::vector<GroundFormula> parts;
        for (std::size_t j = i; j <= std::min(i + 1, trace_.last()); ++j)
            for (const auto& [name, v] : trace_.states[j]) {
                auto sort = sig_.var_sort(name);
                if (!sort)
                    throw Error("trace assigns undeclared variable " + name);
                parts.push_back(equals(GroundTerm::stepped_var(name, j), value_term(v, *sort)));
            }
        auto step = GroundFormula::step_lit(i);
        parts.push_back(i < trace_.last() ? step : GroundFormula::negation(step));
        return GroundFormula::conj(std::move(parts));
    }

    const Trace& trace_;
    const Signature& sig_;
    smt::SolverConfig backend_;
    std::unique_ptr<smt::Session> session_;
    std::size_t queries_ = 0;
};

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Valid:
        return "valid";
    case Verdict::Invalid:
        return "invalid";
    case Verdict::Unknown:
        return "unknown";
    }
    return "?";
}

WitnessReport verify_witness(const Trace& trace, const TemporalFormula& phi, const Signature& sig,
                             const smt::SolverConfig& backend)
{
    if (trace.states.empty())
        return {Verdict::Invalid, "empty trace", 0};
    Delegate delegate(trace, sig, backend);
    std::map<std::pair<const void*, std::size_t>, bool> cache;
    LeafEvaluator leaf = [&](const FoFormula& f, std::size_t i) {
        auto key = std::make_pair(static_cast<const void*>(&f), i);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
        bool value;
        try {
            value = sat_fo(f, trace, i);
        } catch (const NeedsDelegation&) {
            value = delegate.decide(f, i);
        } catch (const IncompleteInterpretation&) {
            value = delegate.decide(f, i);
        }
        cache.emplace(key, value);
        return value;
    };
    try {
        bool ok = sat_temporal(phi, trace.length(), 0, leaf);
        if (ok)
            return {Verdict::Valid, {}, delegate.queries()};
        return {Verdict::Invalid, "the trace does not satisfy the formula", delegate.queries()};
    } catch (const Undecided& u) {
        return {Verdict::Unknown, u.why, delegate.queries()};
    }
}

} // namespace ltlfmt
