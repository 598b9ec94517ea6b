#include "ltlfmt/sort_check.hpp"

#include <algorithm>
#include <optional>

#include "ltlfmt/errors.hpp"
#include "ltlfmt/printer.hpp"

namespace ltlfmt {

namespace {

struct Typed {
    Term term;
    std::optional<Sort> sort; // empty: integer literal expression that adapts to its context
};

class Checker {
public:
    explicit Checker(const Signature& sig) : sig_(sig) {}

    std::vector<std::string> errors;
    bool collect = false;

    TemporalFormula run(const TemporalFormula& f)
    {
        using K = TemporalFormula::Kind;
        switch (f.kind()) {
        case K::True:
        case K::False:
            return f;
        case K::Fo:
            return TemporalFormula::from_fo(run(f.fo()));
        case K::And:
            return TemporalFormula::conj(run(f.lhs()), run(f.rhs()));
        case K::Or:
            return TemporalFormula::disj(run(f.lhs()), run(f.rhs()));
        case K::X:
            return TemporalFormula::tomorrow(run(f.operand()));
        case K::WX:
            return TemporalFormula::weak_tomorrow(run(f.operand()));
        case K::U:
            return TemporalFormula::until(run(f.lhs()), run(f.rhs()));
        case K::R:
            return TemporalFormula::release(run(f.lhs()), run(f.rhs()));
        }
        throw InternalError("unhandled temporal formula kind");
    }

    FoFormula run(const FoFormula& f)
    {
        using K = FoFormula::Kind;
        switch (f.kind()) {
        case K::True:
        case K::False:
            return f;
        case K::Atom:
            return FoFormula::atom(check_atom(f.atom()));
        case K::NegAtom:
            return FoFormula::neg_atom(check_atom(f.atom()));
        case K::And:
            return FoFormula::conj(run(f.lhs()), run(f.rhs()));
        case K::Or:
            return FoFormula::disj(run(f.lhs()), run(f.rhs()));
        case K::Exists:
        case K::Forall: {
            if (!sig_.has_sort(f.bound_sort()))
                fail("undeclared sort " + f.bound_sort().to_string());
            if (sig_.contains(f.bound_var()))
                fail("quantified variable " + f.bound_var() + " clashes with a declared symbol");
            bound_.emplace_back(f.bound_var(), f.bound_sort());
            auto body = run(f.body());
            bound_.pop_back();
            return f.kind() == K::Exists ? FoFormula::exists(f.bound_var(), f.bound_sort(), body)
                                         : FoFormula::forall(f.bound_var(), f.bound_sort(), body);
        }
        }
        throw InternalError("unhandled first-order formula kind");
    }

    Typed infer(const Term& t)
    {
        using K = Term::Kind;
        switch (t.kind()) {
        case K::StateVar: {
            auto s = sig_.var_sort(t.name());
            if (!s) {
                fail("undeclared variable " + t.name());
                return {t, Sort::integer()};
            }
            return {t, *s};
        }
        case K::BoundVar: {
            auto it = std::find_if(bound_.rbegin(), bound_.rend(), [&](const auto& b) { return b.first == t.name(); });
            if (it == bound_.rend()) {
                fail("undeclared variable " + t.name());
                return {t, Sort::integer()};
            }
            return {t, it->second};
        }
        case K::Const: {
            auto s = sig_.constant_sort(t.name());
            if (!s) {
                fail("undeclared constant " + t.name());
                return {t, Sort::integer()};
            }
            return {t, *s};
        }
        case K::IntLit:
            return {t, std::nullopt};
        case K::RatLit:
            return {t, Sort::real()};
        case K::Apply: {
            const auto* decl = sig_.function(t.name());
            if (!decl) {
                fail("undeclared function " + t.name());
                return {t, Sort::integer()};
            }
            if (decl->args.size() != t.args().size()) {
                fail("function " + t.name() + " expects " + std::to_string(decl->args.size()) + " arguments in "
                     + to_string(t));
                return {t, decl->result};
            }
            std::vector<Term> args;
            for (std::size_t i = 0; i < t.args().size(); ++i)
                args.push_back(expect(infer(t.args()[i]), decl->args[i], to_string(t)));
            return {Term::apply(t.name(), std::move(args)), decl->result};
        }
        case K::Arith:
            return infer_arith(t);
        case K::Next:
        case K::WNext: {
            if (mentions_bound(t.operand()))
                throw ScopeError("next/wnext applied to a bound variable in " + to_string(t));
            auto inner = infer(t.operand());
            Term rebuilt = t.kind() == K::Next ? Term::next(inner.term) : Term::wnext(inner.term);
            return {rebuilt, inner.sort};
        }
        }
        throw InternalError("unhandled term kind");
    }

private:
    void fail(std::string message)
    {
        if (!collect)
            throw SortError(message);
        errors.push_back(std::move(message));
    }

    bool mentions_bound(const Term& t) const
    {
        if (t.kind() == Term::Kind::BoundVar)
            return true;
        return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return mentions_bound(a); });
    }

    static Term to_real(const Term& t)
    {
        using K = Term::Kind;
        switch (t.kind()) {
        case K::IntLit:
            return Term::rat_lit(t.value());
        case K::Arith: {
            std::vector<Term> args;
            for (const auto& a : t.args())
                args.push_back(to_real(a));
            return Term::arith(t.op(), std::move(args));
        }
        default:
            return t;
        }
    }

    Term expect(const Typed& typed, const Sort& target, const std::string& context)
    {
        if (!typed.sort) {
            if (target.kind() == Sort::Kind::Int)
                return typed.term;
            if (target.kind() == Sort::Kind::Real)
                return to_real(typed.term);
            fail("numeric literal used at sort " + target.to_string() + " in " + context);
            return typed.term;
        }
        if (*typed.sort != target)
            fail("sort mismatch: " + to_string(typed.term) + " has sort " + typed.sort->to_string() + ", expected "
                 + target.to_string() + " in " + context);
        return typed.term;
    }

    // Unifies the sorts of operands that must agree; literals adapt.
    std::pair<std::vector<Term>, std::optional<Sort>> unify(const std::vector<Typed>& operands, const std::string& context)
    {
        std::optional<Sort> common;
        for (const auto& o : operands) {
            if (!o.sort)
                continue;
            if (!common)
                common = o.sort;
            else if (*common != *o.sort)
                fail("sort mismatch between " + common->to_string() + " and " + o.sort->to_string() + " in "
                     + context);
        }
        std::vector<Term> terms;
        for (const auto& o : operands)
            terms.push_back(common ? expect(o, *common, context) : o.term);
        return {std::move(terms), common};
    }

    Typed infer_arith(const Term& t)
    {
        std::vector<Typed> operands;
        for (const auto& a : t.args())
            operands.push_back(infer(a));
        auto [terms, common] = unify(operands, to_string(t));
        if (common && !common->is_numeric())
            fail("arithmetic on non-numeric sort " + common->to_string() + " in " + to_string(t));

        switch (t.op()) {
        case ArithOp::Mul:
            if (std::none_of(t.args().begin(), t.args().end(), [](const Term& a) { return a.is_literal(); }))
                fail("multiplication needs a literal operand in " + to_string(t));
            break;
        case ArithOp::Div: {
            if (!common) {
                // both sides integer literals: a rational constant
                common = Sort::real();
                for (auto& term : terms)
                    term = to_real(term);
            }
            if (common->kind() != Sort::Kind::Real)
                fail("division is only defined at sort Real in " + to_string(t));
            const Term& divisor = t.args()[1];
            if (divisor.is_literal() && divisor.value() == 0)
                fail("division by zero in " + to_string(t));
            break;
        }
        default:
            break;
        }
        return {Term::arith(t.op(), std::move(terms)), common};
    }

    Atom check_atom(const Atom& a)
    {
        const std::string context = to_string(a);
        if (a.relation == Relation::Predicate) {
            const auto* decl = sig_.predicate(a.predicate);
            if (!decl) {
                fail("undeclared predicate " + a.predicate);
                return a;
            }
            if (decl->args.size() != a.args.size()) {
                fail("predicate " + a.predicate + " expects " + std::to_string(decl->args.size()) + " arguments");
                return a;
            }
            std::vector<Term> args;
            for (std::size_t i = 0; i < a.args.size(); ++i)
                args.push_back(expect(infer(a.args[i]), decl->args[i], context));
            return Atom::pred(a.predicate, std::move(args));
        }

        std::vector<Typed> operands;
        for (const auto& t : a.args)
            operands.push_back(infer(t));
        auto [terms, common] = unify(operands, context);
        bool ordering = a.relation != Relation::Eq && a.relation != Relation::Ne;
        if (ordering && common && !common->is_numeric())
            fail("ordering comparison on non-numeric sort " + common->to_string());
        return Atom{a.relation, {}, std::move(terms)};
    }

    const Signature& sig_;
    std::vector<std::pair<std::string, Sort>> bound_;

    friend Sort ltlfmt::sort_of(const Term&, const Signature&, const std::vector<std::pair<std::string, Sort>>&);
};

} // namespace

SortReport sort_check(const TemporalFormula& f, const Signature& sig)
{
    Checker checker(sig);
    checker.collect = true;
    try {
        checker.run(f);
    } catch (const ScopeError& e) {
        checker.errors.emplace_back(e.what());
    }
    return SortReport{std::move(checker.errors)};
}

TemporalFormula elaborate(const TemporalFormula& f, const Signature& sig)
{
    Checker checker(sig);
    return checker.run(f);
}

FoFormula elaborate(const FoFormula& f, const Signature& sig)
{
    Checker checker(sig);
    return checker.run(f);
}

Sort sort_of(const Term& t, const Signature& sig, const std::vector<std::pair<std::string, Sort>>& bound)
{
    Checker checker(sig);
    checker.bound_ = bound;
    checker.collect = true;
    auto typed = checker.infer(t);
    return typed.sort.value_or(t.kind() == Term::Kind::RatLit ? Sort::real() : Sort::integer());
}

} // namespace ltlfmt
