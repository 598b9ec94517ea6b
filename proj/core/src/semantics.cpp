#include "ltlfmt/semantics.hpp"

#include <unordered_map>

#include "ltlfmt/closure.hpp"
#include "ltlfmt/errors.hpp"
#include "ltlfmt/printer.hpp"

namespace ltlfmt {

namespace {

const Rational& number(const Value& v, const Term& context)
{
    if (!v.is_number())
        throw SortError("non-numeric value in arithmetic term " + to_string(context));
    return v.number();
}

bool compare(Relation r, const Value& a, const Value& b)
{
    switch (r) {
    case Relation::Eq:
        return a == b;
    case Relation::Ne:
        return !(a == b);
    case Relation::Lt:
        return a.number() < b.number();
    case Relation::Le:
        return a.number() <= b.number();
    case Relation::Gt:
        return a.number() > b.number();
    case Relation::Ge:
        return a.number() >= b.number();
    case Relation::Predicate:
        break;
    }
    throw InternalError("predicate passed to compare");
}

class TemporalEvaluator {
public:
    TemporalEvaluator(std::size_t length, const LeafEvaluator& leaf) : length_(length), leaf_(leaf) {}

    bool eval(const TemporalFormula& f, std::size_t i)
    {
        auto key = std::make_pair(f.identity(), i);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        bool result = compute(f, i);
        memo_.emplace(key, result);
        return result;
    }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<const void*, std::size_t>& k) const
        {
            std::size_t seed = std::hash<const void*>{}(k.first);
            hash_combine(seed, k.second);
            return seed;
        }
    };

    bool compute(const TemporalFormula& f, std::size_t i)
    {
        using K = TemporalFormula::Kind;
        const std::size_t last = length_ - 1;
        switch (f.kind()) {
        case K::True:
            return true;
        case K::False:
            return false;
        case K::Fo:
            return leaf_(f.fo(), i);
        case K::And:
            return eval(f.lhs(), i) && eval(f.rhs(), i);
        case K::Or:
            return eval(f.lhs(), i) || eval(f.rhs(), i);
        case K::X:
            return i < last && eval(f.operand(), i + 1);
        case K::WX:
            return i == last || eval(f.operand(), i + 1);
        case K::U:
            for (std::size_t j = i; j < length_; ++j) {
                if (eval(f.rhs(), j))
                    return true;
                if (!eval(f.lhs(), j))
                    return false;
            }
            return false;
        case K::R:
            for (std::size_t j = i; j < length_; ++j) {
                if (!eval(f.rhs(), j))
                    return false;
                if (eval(f.lhs(), j))
                    return true;
            }
            return true;
        }
        throw InternalError("unhandled temporal formula kind");
    }

    std::size_t length_;
    const LeafEvaluator& leaf_;
    std::unordered_map<std::pair<const void*, std::size_t>, bool, KeyHash> memo_;
};

} // namespace

std::optional<Value> eval_term(const Term& t, const Trace& trace, std::size_t i, const Environment& env)
{
    switch (t.kind()) {
    case Term::Kind::StateVar: {
        const auto& state = trace.states.at(i);
        auto it = state.find(t.name());
        if (it == state.end())
            throw IncompleteInterpretation("state " + std::to_string(i) + " assigns no value to " + t.name());
        return it->second;
    }
    case Term::Kind::BoundVar: {
        auto it = env.find(t.name());
        if (it == env.end())
            throw ScopeError("unbound variable " + t.name());
        return it->second;
    }
    case Term::Kind::Const: {
        auto v = trace.interp.constant(t.name());
        if (!v)
            throw IncompleteInterpretation("incomplete interpretation: no value for constant " + t.name());
        return v;
    }
    case Term::Kind::IntLit:
    case Term::Kind::RatLit:
        return Value::number(t.value());
    case Term::Kind::Next:
    case Term::Kind::WNext:
        if (i + 1 >= trace.length())
            return std::nullopt;
        return eval_term(t.operand(), trace, i + 1, env);
    case Term::Kind::Apply: {
        std::vector<Value> args;
        for (const auto& a : t.args()) {
            auto v = eval_term(a, trace, i, env);
            if (!v)
                return std::nullopt;
            args.push_back(std::move(*v));
        }
        auto v = trace.interp.function(t.name(), args);
        if (!v)
            throw IncompleteInterpretation("incomplete interpretation: no entry for " + to_string(t));
        return v;
    }
    case Term::Kind::Arith: {
        std::vector<Rational> args;
        for (const auto& a : t.args()) {
            auto v = eval_term(a, trace, i, env);
            if (!v)
                return std::nullopt;
            args.push_back(number(*v, t));
        }
        switch (t.op()) {
        case ArithOp::Add:
            return Value::number(args[0] + args[1]);
        case ArithOp::Sub:
            return Value::number(args[0] - args[1]);
        case ArithOp::Neg:
            return Value::number(-args[0]);
        case ArithOp::Mul:
            return Value::number(args[0] * args[1]);
        case ArithOp::Div:
            if (args[1] == 0)
                throw NeedsDelegation("division by zero in " + to_string(t));
            return Value::number(args[0] / args[1]);
        }
        break;
    }
    }
    throw InternalError("unhandled term kind");
}

bool sat_atom(const Atom& a, const Trace& trace, std::size_t i, const Environment& env)
{
    std::vector<Value> args;
    for (const auto& t : a.args) {
        auto v = eval_term(t, trace, i, env);
        if (!v)
            return classify_atom(a) != AtomStrength::Strong;
        args.push_back(std::move(*v));
    }
    if (a.relation != Relation::Predicate)
        return compare(a.relation, args[0], args[1]);
    auto holds = trace.interp.predicate(a.predicate, args);
    if (!holds)
        throw IncompleteInterpretation("incomplete interpretation: no entry for " + to_string(a));
    return *holds;
}

bool sat_fo(const FoFormula& f, const Trace& trace, std::size_t i, const Environment& env)
{
    using K = FoFormula::Kind;
    switch (f.kind()) {
    case K::True:
        return true;
    case K::False:
        return false;
    case K::Atom:
        return sat_atom(f.atom(), trace, i, env);
    case K::NegAtom:
        return !sat_atom(f.atom(), trace, i, env);
    case K::And:
        return sat_fo(f.lhs(), trace, i, env) && sat_fo(f.rhs(), trace, i, env);
    case K::Or:
        return sat_fo(f.lhs(), trace, i, env) || sat_fo(f.rhs(), trace, i, env);
    case K::Exists:
    case K::Forall: {
        const auto* domain = trace.interp.domain(f.bound_sort());
        if (!domain)
            throw NeedsDelegation("delegate to SMT verification: quantifier over " + f.bound_sort().to_string());
        bool exists = f.kind() == K::Exists;
        Environment inner = env;
        for (const auto& v : *domain) {
            inner[f.bound_var()] = v;
            if (sat_fo(f.body(), trace, i, inner) == exists)
                return exists;
        }
        return !exists;
    }
    }
    throw InternalError("unhandled first-order formula kind");
}

bool sat_temporal(const TemporalFormula& f, std::size_t length, std::size_t i, const LeafEvaluator& leaf)
{
    if (i >= length)
        throw std::out_of_range("position " + std::to_string(i) + " outside a trace of length " + std::to_string(length));
    TemporalEvaluator evaluator(length, leaf);
    return evaluator.eval(f, i);
}

bool sat_temporal(const TemporalFormula& f, const Trace& trace, std::size_t i)
{
    LeafEvaluator direct = [&](const FoFormula& leaf, std::size_t j) { return sat_fo(leaf, trace, j); };
    return sat_temporal(f, trace.length(), i, direct);
}

} // namespace ltlfmt
