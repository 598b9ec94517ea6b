#include "ltlfmt/surface.hpp"

namespace ltlfmt {

SurfaceFormula SurfaceFormula::top() { return SurfaceFormula(std::make_shared<const Node>(Node{Kind::True, {}, {}, {}, {}})); }
SurfaceFormula SurfaceFormula::bottom() { return SurfaceFormula(std::make_shared<const Node>(Node{Kind::False, {}, {}, {}, {}})); }

SurfaceFormula SurfaceFormula::atom(Atom a)
{
    return SurfaceFormula(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}, {}, {}}));
}

SurfaceFormula SurfaceFormula::unary(Kind kind, SurfaceFormula operand)
{
    return SurfaceFormula(std::make_shared<const Node>(Node{kind, {}, {std::move(operand)}, {}, {}}));
}

SurfaceFormula SurfaceFormula::binary(Kind kind, SurfaceFormula lhs, SurfaceFormula rhs)
{
    return SurfaceFormula(std::make_shared<const Node>(Node{kind, {}, {std::move(lhs), std::move(rhs)}, {}, {}}));
}

SurfaceFormula SurfaceFormula::quantifier(Kind kind, std::string var, Sort sort, SurfaceFormula body)
{
    return SurfaceFormula(std::make_shared<const Node>(Node{kind, {}, {std::move(body)}, std::move(var), std::move(sort)}));
}

bool SurfaceFormula::is_temporal_operator() const
{
    switch (kind()) {
    case Kind::X:
    case Kind::WX:
    case Kind::U:
    case Kind::R:
    case Kind::F:
    case Kind::G:
        return true;
    default:
        return false;
    }
}

} // namespace ltlfmt
