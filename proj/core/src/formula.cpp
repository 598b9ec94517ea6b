#include "ltlfmt/formula.hpp"

#include <functional>

namespace ltlfmt {

std::size_t Atom::hash() const
{
    std::size_t h = std::hash<int>{}(static_cast<int>(relation));
    hash_combine(h, std::hash<std::string>{}(predicate));
    for (const auto& a : args)
        hash_combine(h, a.hash());
    return h;
}

// FoFormula

FoFormula FoFormula::make(Node node)
{
    std::size_t h = std::hash<int>{}(static_cast<int>(node.kind)) * 31;
    if (node.atom)
        hash_combine(h, node.atom->hash());
    for (const auto& c : node.children)
        hash_combine(h, c.hash());
    hash_combine(h, std::hash<std::string>{}(node.var));
    if (node.sort)
        hash_combine(h, std::hash<std::string>{}(node.sort->to_string()));
    node.hash = h;
    return FoFormula(std::make_shared<const Node>(std::move(node)));
}

FoFormula FoFormula::top() { return make({Kind::True, {}, {}, {}, {}}); }
FoFormula FoFormula::bottom() { return make({Kind::False, {}, {}, {}, {}}); }
FoFormula FoFormula::atom(Atom a) { return make({Kind::Atom, std::move(a), {}, {}, {}}); }
FoFormula FoFormula::neg_atom(Atom a) { return make({Kind::NegAtom, std::move(a), {}, {}, {}}); }

FoFormula FoFormula::conj(FoFormula lhs, FoFormula rhs)
{
    return make({Kind::And, {}, {std::move(lhs), std::move(rhs)}, {}, {}});
}

FoFormula FoFormula::disj(FoFormula lhs, FoFormula rhs)
{
    return make({Kind::Or, {}, {std::move(lhs), std::move(rhs)}, {}, {}});
}

FoFormula FoFormula::exists(std::string var, Sort sort, FoFormula body)
{
    return make({Kind::Exists, {}, {std::move(body)}, std::move(var), std::move(sort)});
}

FoFormula FoFormula::forall(std::string var, Sort sort, FoFormula body)
{
    return make({Kind::Forall, {}, {std::move(body)}, std::move(var), std::move(sort)});
}

bool operator==(const FoFormula& a, const FoFormula& b)
{
    if (a.node_ == b.node_)
        return true;
    return a.hash() == b.hash() && a.kind() == b.kind() && a.node_->atom == b.node_->atom
        && a.node_->var == b.node_->var && a.node_->sort == b.node_->sort
        && a.node_->children == b.node_->children;
}

// TemporalFormula

TemporalFormula TemporalFormula::make(Node node)
{
    std::size_t h = std::hash<int>{}(static_cast<int>(node.kind)) * 131;
    if (node.fo)
        hash_combine(h, node.fo->hash());
    for (const auto& c : node.children)
        hash_combine(h, c.hash());
    node.hash = h;
    return TemporalFormula(std::make_shared<const Node>(std::move(node)));
}

TemporalFormula TemporalFormula::top() { return make({Kind::True, {}, {}}); }
TemporalFormula TemporalFormula::bottom() { return make({Kind::False, {}, {}}); }

TemporalFormula TemporalFormula::from_fo(const FoFormula& f)
{
    switch (f.kind()) {
    case FoFormula::Kind::True:
        return top();
    case FoFormula::Kind::False:
        return bottom();
    case FoFormula::Kind::And:
        return conj(from_fo(f.lhs()), from_fo(f.rhs()));
    case FoFormula::Kind::Or:
        return disj(from_fo(f.lhs()), from_fo(f.rhs()));
    default:
        return make({Kind::Fo, f, {}});
    }
}

TemporalFormula TemporalFormula::conj(TemporalFormula lhs, TemporalFormula rhs)
{
    return make({Kind::And, {}, {std::move(lhs), std::move(rhs)}});
}

TemporalFormula TemporalFormula::disj(TemporalFormula lhs, TemporalFormula rhs)
{
    return make({Kind::Or, {}, {std::move(lhs), std::move(rhs)}});
}

TemporalFormula TemporalFormula::tomorrow(TemporalFormula f) { return make({Kind::X, {}, {std::move(f)}}); }
TemporalFormula TemporalFormula::weak_tomorrow(TemporalFormula f) { return make({Kind::WX, {}, {std::move(f)}}); }

TemporalFormula TemporalFormula::until(TemporalFormula lhs, TemporalFormula rhs)
{
    return make({Kind::U, {}, {std::move(lhs), std::move(rhs)}});
}

TemporalFormula TemporalFormula::release(TemporalFormula lhs, TemporalFormula rhs)
{
    return make({Kind::R, {}, {std::move(lhs), std::move(rhs)}});
}

TemporalFormula TemporalFormula::eventually(TemporalFormula f) { return until(top(), std::move(f)); }
TemporalFormula TemporalFormula::always(TemporalFormula f) { return release(bottom(), std::move(f)); }

bool TemporalFormula::is_elementary() const
{
    return is_first_order() || is_tomorrow();
}

bool operator==(const TemporalFormula& a, const TemporalFormula& b)
{
    if (a.node_ == b.node_)
        return true;
    return a.hash() == b.hash() && a.kind() == b.kind() && a.node_->fo == b.node_->fo
        && a.node_->children == b.node_->children;
}

bool has_quantifier(const TemporalFormula& f)
{
    if (f.kind() == TemporalFormula::Kind::Fo && f.fo().is_quantifier())
        return true;
    for (const auto& c : f.children())
        if (has_quantifier(c))
            return true;
    return false;
}

} // namespace ltlfmt
