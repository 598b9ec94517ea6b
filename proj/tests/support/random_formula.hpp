#pragma once

#include <random>
#include <string>
#include <vector>

#include "ltlfmt/formula.hpp"
#include "ltlfmt/printer.hpp"
#include "ltlfmt/semantics.hpp"
#include "ltlfmt/signature.hpp"
#include "ltlfmt/surface.hpp"
#include "ltlfmt/trace.hpp"

namespace ltlfmt::fixtures {

/// Random formulas over two Int state variables x and y.
///
/// Terms stay linear so the SMT backend can decide every instance. With
/// `bounded_quantifiers` a quantified body only ranges over {0,1}, which
/// keeps the solver and a finite enumeration in agreement.
class RandomFormula {
public:
    explicit RandomFormula(unsigned seed, bool bounded_quantifiers = true)
        : rng_(seed), bounded_(bounded_quantifiers)
    {
    }

    static Signature signature()
    {
        Signature sig;
        sig.declare_var("x", Sort::integer());
        sig.declare_var("y", Sort::integer());
        return sig;
    }

    bool allow_next = true;
    bool allow_quantifiers = true;

    Term term(int depth, const std::vector<std::string>& bound = {})
    {
        int choice = pick(depth <= 0 ? 4 : 7);
        switch (choice) {
        case 0:
        case 1:
            return Term::state_var(pick(2) ? "x" : "y");
        case 2:
            return Term::int_lit(Rational(pick(3)));
        case 3:
            if (!bound.empty())
                return Term::bound_var(bound[pick(bound.size())]);
            if (allow_next) {
                auto v = Term::state_var(pick(2) ? "x" : "y");
                return pick(2) ? Term::next(v) : Term::wnext(v);
            }
            return Term::state_var("x");
        case 4:
            return Term::arith(ArithOp::Add, {term(depth - 1, bound), term(depth - 1, bound)});
        case 5:
            return Term::arith(ArithOp::Sub, {term(depth - 1, bound), term(depth - 1, bound)});
        default:
            return Term::arith(ArithOp::Mul, {Term::int_lit(Rational(pick(3))), term(depth - 1, bound)});
        }
    }

    Atom atom(const std::vector<std::string>& bound = {})
    {
        static const Relation rels[] = {Relation::Eq, Relation::Ne, Relation::Lt,
                                        Relation::Le, Relation::Gt, Relation::Ge};
        return Atom::rel(rels[pick(6)], term(1, bound), term(1, bound));
    }

    FoFormula fo(int depth, std::vector<std::string> bound = {})
    {
        int choice = pick(depth <= 0 ? 3 : (allow_quantifiers && bound.empty() ? 7 : 5));
        switch (choice) {
        case 0:
        case 1:
            return FoFormula::atom(atom(bound));
        case 2:
            return FoFormula::neg_atom(atom(bound));
        case 3:
            return FoFormula::conj(fo(depth - 1, bound), fo(depth - 1, bound));
        case 4:
            return FoFormula::disj(fo(depth - 1, bound), fo(depth - 1, bound));
        default: {
            std::string v = "z";
            bound.push_back(v);
            auto body = fo(depth - 1, bound);
            auto z = Term::bound_var(v);
            auto zero = Term::int_lit(Rational(0));
            auto one = Term::int_lit(Rational(1));
            if (choice == 5) {
                if (bounded_)
                    body = FoFormula::conj(FoFormula::conj(FoFormula::atom(Atom::rel(Relation::Ge, z, zero)),
                                                           FoFormula::atom(Atom::rel(Relation::Le, z, one))),
                                           body);
                return FoFormula::exists(v, Sort::integer(), body);
            }
            if (bounded_)
                body = FoFormula::disj(FoFormula::disj(FoFormula::atom(Atom::rel(Relation::Lt, z, zero)),
                                                       FoFormula::atom(Atom::rel(Relation::Gt, z, one))),
                                       body);
            return FoFormula::forall(v, Sort::integer(), body);
        }
        }
    }

    TemporalFormula temporal(int depth)
    {
        if (depth <= 0) {
            int leaf = pick(12);
            if (leaf == 0)
                return TemporalFormula::top();
            if (leaf == 1)
                return TemporalFormula::bottom();
            return TemporalFormula::from_fo(fo(1));
        }
        switch (pick(9)) {
        case 0:
            return TemporalFormula::conj(temporal(depth - 1), temporal(depth - 1));
        case 1:
            return TemporalFormula::disj(temporal(depth - 1), temporal(depth - 1));
        case 2:
            return TemporalFormula::tomorrow(temporal(depth - 1));
        case 3:
            return TemporalFormula::weak_tomorrow(temporal(depth - 1));
        case 4:
            return TemporalFormula::until(temporal(depth - 1), temporal(depth - 1));
        case 5:
            return TemporalFormula::release(temporal(depth - 1), temporal(depth - 1));
        case 6:
            return TemporalFormula::eventually(temporal(depth - 1));
        case 7:
            return TemporalFormula::always(temporal(depth - 1));
        default:
            return TemporalFormula::from_fo(fo(1));
        }
    }

    /// Full syntax with negation and implication anywhere above atoms.
    SurfaceFormula surface(int depth, std::vector<std::string> bound = {})
    {
        using K = SurfaceFormula::Kind;
        if (depth <= 0) {
            int leaf = pick(10);
            if (leaf == 0)
                return SurfaceFormula::top();
            if (leaf == 1)
                return SurfaceFormula::bottom();
            return SurfaceFormula::atom(atom(bound));
        }
        bool fo_only = !bound.empty();
        int choice = pick(fo_only ? 5 : 14);
        switch (choice) {
        case 0:
            return SurfaceFormula::negation(surface(depth - 1, bound));
        case 1:
            return SurfaceFormula::binary(K::And, surface(depth - 1, bound), surface(depth - 1, bound));
        case 2:
            return SurfaceFormula::binary(K::Or, surface(depth - 1, bound), surface(depth - 1, bound));
        case 3:
            return SurfaceFormula::binary(K::Implies, surface(depth - 1, bound), surface(depth - 1, bound));
        case 4:
            return SurfaceFormula::atom(atom(bound));
        case 5:
            return SurfaceFormula::unary(K::X, surface(depth - 1));
        case 6:
            return SurfaceFormula::unary(K::WX, surface(depth - 1));
        case 7:
            return SurfaceFormula::unary(K::F, surface(depth - 1));
        case 8:
            return SurfaceFormula::unary(K::G, surface(depth - 1));
        case 9:
            return SurfaceFormula::binary(K::U, surface(depth - 1), surface(depth - 1));
        case 10:
            return SurfaceFormula::binary(K::R, surface(depth - 1), surface(depth - 1));
        case 11:
        case 12: {
            if (!allow_quantifiers)
                return SurfaceFormula::atom(atom());
            std::vector<std::string> b{"z"};
            return SurfaceFormula::quantifier(choice == 11 ? K::Exists : K::Forall, "z", Sort::integer(),
                                              surface(1, b));
        }
        default:
            return SurfaceFormula::atom(atom());
        }
    }

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

private:
    std::mt19937 rng_;
    bool bounded_;
};

/// Reference evaluator for the full surface syntax, written directly from
/// the finite-trace semantics. Quantifiers range over `domain`.
class SurfaceOracle {
public:
    SurfaceOracle(const Trace& trace, std::vector<Value> domain) : trace_(trace), domain_(std::move(domain)) {}

    bool eval(const SurfaceFormula& f, std::size_t i, const Environment& env = {}) const
    {
        using K = SurfaceFormula::Kind;
        std::size_t last = trace_.last();
        switch (f.kind()) {
        case K::True:
            return true;
        case K::False:
            return false;
        case K::Atom:
            return sat_atom(f.atom(), trace_, i, env);
        case K::Not:
            return !eval(f.operand(), i, env);
        case K::And:
            return eval(f.lhs(), i, env) && eval(f.rhs(), i, env);
        case K::Or:
            return eval(f.lhs(), i, env) || eval(f.rhs(), i, env);
        case K::Implies:
            return !eval(f.lhs(), i, env) || eval(f.rhs(), i, env);
        case K::Exists:
        case K::Forall:
            for (const auto& v : domain_) {
                Environment inner = env;
                inner[f.bound_var()] = v;
                bool holds = eval(f.operand(), i, inner);
                if (f.kind() == K::Exists && holds)
                    return true;
                if (f.kind() == K::Forall && !holds)
                    return false;
            }
            return f.kind() == K::Forall;
        case K::X:
            return i < last && eval(f.operand(), i + 1, env);
        case K::WX:
            return i == last || eval(f.operand(), i + 1, env);
        case K::F:
            for (std::size_t j = i; j <= last; ++j)
                if (eval(f.operand(), j, env))
                    return true;
            return false;
        case K::G:
            for (std::size_t j = i; j <= last; ++j)
                if (!eval(f.operand(), j, env))
                    return false;
            return true;
        case K::U:
            for (std::size_t j = i; j <= last; ++j) {
                if (eval(f.rhs(), j, env))
                    return true;
                if (!eval(f.lhs(), j, env))
                    return false;
            }
            return false;
        case K::R:
            for (std::size_t j = i; j <= last; ++j) {
                if (!eval(f.rhs(), j, env))
                    return false;
                if (eval(f.lhs(), j, env))
                    return true;
            }
            return true;
        }
        return false;
    }

private:
    const Trace& trace_;
    std::vector<Value> domain_;
};

/// Every trace over {x, y} with values in {lo..hi} up to the given length.
inline std::vector<Trace> all_traces(std::size_t max_len, long lo = 0, long hi = 1)
{
    std::vector<Trace> out;
    std::vector<Value> values;
    for (long v = lo; v <= hi; ++v)
        values.push_back(Value::number(Rational(v)));
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t slots = 2 * len;
        std::vector<std::size_t> digits(slots, 0);
        while (true) {
            Trace t;
            for (std::size_t s = 0; s < len; ++s)
                t.states.push_back({{"x", values[digits[2 * s]]}, {"y", values[digits[2 * s + 1]]}});
            out.push_back(std::move(t));
            std::size_t d = 0;
            while (d < slots && ++digits[d] == values.size())
                digits[d++] = 0;
            if (d == slots)
                break;
        }
    }
    return out;
}

} // namespace ltlfmt::fixtures
