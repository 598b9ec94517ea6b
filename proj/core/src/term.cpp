#include "ltlfmt/term.hpp"

#include <algorithm>
#include <functional>

namespace ltlfmt {

Term Term::make(Node node)
{
    std::size_t h = std::hash<int>{}(static_cast<int>(node.kind));
    hash_combine(h, std::hash<std::string>{}(node.name));
    if (node.kind == Kind::IntLit || node.kind == Kind::RatLit)
        hash_combine(h, hash_rational(node.value));
    hash_combine(h, static_cast<std::size_t>(node.op));
    for (const auto& a : node.args)
        hash_combine(h, a.hash());
    node.hash = h;
    return Term(std::make_shared<const Node>(std::move(node)));
}

Term Term::state_var(std::string name) { return make({Kind::StateVar, std::move(name), {}, {}, {}}); }
Term Term::bound_var(std::string name) { return make({Kind::BoundVar, std::move(name), {}, {}, {}}); }
Term Term::constant(std::string name) { return make({Kind::Const, std::move(name), {}, {}, {}}); }
Term Term::int_lit(const Rational& value) { return make({Kind::IntLit, {}, value, {}, {}}); }
Term Term::rat_lit(const Rational& value) { return make({Kind::RatLit, {}, value, {}, {}}); }

Term Term::apply(std::string function, std::vector<Term> args)
{
    return make({Kind::Apply, std::move(function), {}, {}, std::move(args)});
}

Term Term::arith(ArithOp op, std::vector<Term> args)
{
    return make({Kind::Arith, {}, {}, op, std::move(args)});
}

Term Term::next(Term operand) { return make({Kind::Next, {}, {}, {}, {std::move(operand)}}); }
Term Term::wnext(Term operand) { return make({Kind::WNext, {}, {}, {}, {std::move(operand)}}); }

bool Term::contains_next() const
{
    if (kind() == Kind::Next)
        return true;
    return std::any_of(args().begin(), args().end(), [](const Term& t) { return t.contains_next(); });
}

bool Term::contains_wnext() const
{
    if (kind() == Kind::WNext)
        return true;
    return std::any_of(args().begin(), args().end(), [](const Term& t) { return t.contains_wnext(); });
}

int Term::next_depth() const
{
    int depth = 0;
    for (const auto& a : args())
        depth = std::max(depth, a.next_depth());
    return is_next() ? depth + 1 : depth;
}

bool operator==(const Term& a, const Term& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.name() != b.name() || a.op() != b.op())
        return false;
    if ((a.kind() == Term::Kind::IntLit || a.kind() == Term::Kind::RatLit) && a.value() != b.value())
        return false;
    return a.args() == b.args();
}

} // namespace ltlfmt
