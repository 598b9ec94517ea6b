#include "ltlfmt/flatten.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "ltlfmt/closure.hpp"
#include "ltlfmt/errors.hpp"
#include "ltlfmt/printer.hpp"
#include "ltlfmt/sort_check.hpp"

namespace ltlfmt {

namespace {

bool mentions_bound(const Term& t)
{
    if (t.kind() == Term::Kind::BoundVar)
        return true;
    return std::any_of(t.args().begin(), t.args().end(), [](const Term& a) { return mentions_bound(a); });
}

Term weaken(const Term& t)
{
    std::vector<Term> args;
    for (const auto& a : t.args())
        args.push_back(weaken(a));
    switch (t.kind()) {
    case Term::Kind::Next:
    case Term::Kind::WNext:
        return Term::wnext(args.front());
    case Term::Kind::Apply:
        return Term::apply(t.name(), std::move(args));
    case Term::Kind::Arith:
        return Term::arith(t.op(), std::move(args));
    default:
        return t;
    }
}

class Flattener {
public:
    explicit Flattener(Signature& sig) : sig_(sig) {}

    TemporalFormula run(const TemporalFormula& f)
    {
        auto body = rewrite(f);
        for (const auto& d : definitions_)
            body = TemporalFormula::conj(body, d);
        return body;
    }

private:
    TemporalFormula rewrite(const TemporalFormula& f)
    {
        using K = TemporalFormula::Kind;
        switch (f.kind()) {
        case K::True:
        case K::False:
            return f;
        case K::Fo:
            return TemporalFormula::from_fo(rewrite(f.fo()));
        case K::And:
            return TemporalFormula::conj(rewrite(f.lhs()), rewrite(f.rhs()));
        case K::Or:
            return TemporalFormula::disj(rewrite(f.lhs()), rewrite(f.rhs()));
        case K::X:
            return TemporalFormula::tomorrow(rewrite(f.operand()));
        case K::WX:
            return TemporalFormula::weak_tomorrow(rewrite(f.operand()));
        case K::U:
            return TemporalFormula::until(rewrite(f.lhs()), rewrite(f.rhs()));
        case K::R:
            return TemporalFormula::release(rewrite(f.lhs()), rewrite(f.rhs()));
        }
        throw InternalError("unhandled temporal formula kind");
    }

    FoFormula rewrite(const FoFormula& f)
    {
        using K = FoFormula::Kind;
        switch (f.kind()) {
        case K::True:
        case K::False:
            return f;
        case K::Atom:
        case K::NegAtom:
            return rewrite_literal(f.atom(), f.kind() == K::NegAtom);
        case K::And:
            return FoFormula::conj(rewrite(f.lhs()), rewrite(f.rhs()));
        case K::Or:
            return FoFormula::disj(rewrite(f.lhs()), rewrite(f.rhs()));
        case K::Exists:
            return FoFormula::exists(f.bound_var(), f.bound_sort(), rewrite(f.body()));
        case K::Forall:
            return FoFormula::forall(f.bound_var(), f.bound_sort(), rewrite(f.body()));
        }
        throw InternalError("unhandled first-order formula kind");
    }

    FoFormula rewrite_literal(const Atom& a, bool negated)
    {
        int depth = 0;
        for (const auto& t : a.args)
            depth = std::max(depth, t.next_depth());

        Atom flat = a;
        for (auto& t : flat.args)
            t = rewrite(t);
        if (depth <= 1)
            return negated ? FoFormula::neg_atom(flat) : FoFormula::atom(flat);

        Term r = Term::state_var(remaining_counter());
        Term d = Term::int_lit(depth);
        auto defined = FoFormula::atom(Atom::rel(Relation::Ge, r, d));
        auto undefined = FoFormula::atom(Atom::rel(Relation::Lt, r, d));
        bool strong = classify_atom(a) == AtomStrength::Strong;
        if (!negated)
            return strong ? FoFormula::conj(defined, FoFormula::atom(flat))
                          : FoFormula::disj(undefined, FoFormula::atom(flat));
        return strong ? FoFormula::disj(undefined, FoFormula::neg_atom(flat))
                      : FoFormula::conj(defined, FoFormula::neg_atom(flat));
    }

    Term rewrite(const Term& t)
    {
        std::vector<Term> args;
        for (const auto& a : t.args())
            args.push_back(rewrite(a));
        switch (t.kind()) {
        case Term::Kind::Apply:
            return Term::apply(t.name(), std::move(args));
        case Term::Kind::Arith:
            return Term::arith(t.op(), std::move(args));
        case Term::Kind::Next:
        case Term::Kind::WNext: {
            if (mentions_bound(t.operand()))
                throw ScopeError("next/wnext applied to a bound variable in " + to_string(t));
            Term operand = args.front();
            if (operand.kind() != Term::Kind::StateVar)
                operand = Term::state_var(alias(weaken(operand)));
            return t.kind() == Term::Kind::Next ? Term::next(operand) : Term::wnext(operand);
        }
        default:
            return t;
        }
    }

    // A state variable y with G(y = t).
    std::string alias(const Term& t)
    {
        if (auto it = aliases_.find(t); it != aliases_.end())
            return it->second;
        Sort sort = sort_of(t, sig_);
        std::string name = sig_.fresh_var("_flat", sort);
        aliases_.emplace(t, name);
        definitions_.push_back(TemporalFormula::always(
            TemporalFormula::from_fo(FoFormula::atom(Atom::rel(Relation::Eq, Term::state_var(name), t)))));
        return name;
    }

    // A state variable counting the states left after the current one.
    const std::string& remaining_counter()
    {
        if (remaining_)
            return *remaining_;
        remaining_ = sig_.fresh_var("_flat", Sort::integer());
        Term r = Term::state_var(*remaining_);
        auto at_end = TemporalFormula::disj(TemporalFormula::tomorrow(TemporalFormula::top()),
                                            TemporalFormula::from_fo(FoFormula::atom(Atom::rel(Relation::Eq, r, Term::int_lit(0)))));
        auto countdown = TemporalFormula::from_fo(FoFormula::atom(
            Atom::rel(Relation::Eq, Term::wnext(r), Term::arith(ArithOp::Sub, {r, Term::int_lit(1)}))));
        definitions_.push_back(TemporalFormula::always(at_end));
        definitions_.push_back(TemporalFormula::always(countdown));
        return *remaining_;
    }

    Signature& sig_;
    std::unordered_map<Term, std::string, TermHash> aliases_;
    std::optional<std::string> remaining_;
    std::vector<TemporalFormula> definitions_;
};

bool flat_fo(const FoFormula& f)
{
    bool ok = true;
    for_each_atom(f, [&](const Atom& a) {
        for (const auto& t : a.args)
            ok = ok && is_flat(t);
    });
    return ok;
}

} // namespace

bool is_flat(const Term& t)
{
    if (t.is_next() && t.operand().kind() != Term::Kind::StateVar)
        return false;
    return std::all_of(t.args().begin(), t.args().end(), [](const Term& a) { return is_flat(a); });
}

bool is_flat(const TemporalFormula& f)
{
    if (f.kind() == TemporalFormula::Kind::Fo && !flat_fo(f.fo()))
        return false;
    return std::all_of(f.children().begin(), f.children().end(), [](const TemporalFormula& c) { return is_flat(c); });
}

TemporalFormula flatten_next(const TemporalFormula& f, Signature& sig)
{
    if (is_flat(f))
        return f;
    Flattener flattener(sig);
    return flattener.run(f);
}

} // namespace ltlfmt
