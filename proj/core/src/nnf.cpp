#include "ltlfmt/nnf.hpp"

#include "ltlfmt/errors.hpp"

namespace ltlfmt {

namespace {

using SK = SurfaceFormula::Kind;
using TF = TemporalFormula;

FoFormula fo_nnf(const SurfaceFormula& f, bool negated)
{
    switch (f.kind()) {
    case SK::True:
        return negated ? FoFormula::bottom() : FoFormula::top();
    case SK::False:
        return negated ? FoFormula::top() : FoFormula::bottom();
    case SK::Atom:
        return negated ? FoFormula::neg_atom(f.atom()) : FoFormula::atom(f.atom());
    case SK::Not:
        return fo_nnf(f.operand(), !negated);
    case SK::And:
    case SK::Or: {
        auto lhs = fo_nnf(f.lhs(), negated);
        auto rhs = fo_nnf(f.rhs(), negated);
        bool conj = (f.kind() == SK::And) != negated;
        return conj ? FoFormula::conj(lhs, rhs) : FoFormula::disj(lhs, rhs);
    }
    case SK::Implies: {
        // a -> b == !a | b
        auto lhs = fo_nnf(f.lhs(), !negated);
        auto rhs = fo_nnf(f.rhs(), negated);
        return negated ? FoFormula::conj(lhs, rhs) : FoFormula::disj(lhs, rhs);
    }
    case SK::Exists:
    case SK::Forall: {
        auto body = fo_nnf(f.operand(), negated);
        bool exists = (f.kind() == SK::Exists) != negated;
        return exists ? FoFormula::exists(f.bound_var(), f.bound_sort(), body)
                      : FoFormula::forall(f.bound_var(), f.bound_sort(), body);
    }
    default:
        throw ScopeError("temporal operator under quantifier");
    }
}

TF nnf(const SurfaceFormula& f, bool negated)
{
    switch (f.kind()) {
    case SK::True:
        return negated ? TF::bottom() : TF::top();
    case SK::False:
        return negated ? TF::top() : TF::bottom();
    case SK::Atom:
        return TF::from_fo(negated ? FoFormula::neg_atom(f.atom()) : FoFormula::atom(f.atom()));
    case SK::Not:
        return nnf(f.operand(), !negated);
    case SK::And:
    case SK::Or: {
        auto lhs = nnf(f.lhs(), negated);
        auto rhs = nnf(f.rhs(), negated);
        bool conj = (f.kind() == SK::And) != negated;
        return conj ? TF::conj(lhs, rhs) : TF::disj(lhs, rhs);
    }
    case SK::Implies: {
        auto lhs = nnf(f.lhs(), !negated);
        auto rhs = nnf(f.rhs(), negated);
        return negated ? TF::conj(lhs, rhs) : TF::disj(lhs, rhs);
    }
    case SK::Exists:
    case SK::Forall:
        return TF::from_fo(fo_nnf(f, negated));
    case SK::X:
        return negated ? TF::weak_tomorrow(nnf(f.operand(), true)) : TF::tomorrow(nnf(f.operand(), false));
    case SK::WX:
        return negated ? TF::tomorrow(nnf(f.operand(), true)) : TF::weak_tomorrow(nnf(f.operand(), false));
    case SK::U: {
        auto lhs = nnf(f.lhs(), negated);
        auto rhs = nnf(f.rhs(), negated);
        return negated ? TF::release(lhs, rhs) : TF::until(lhs, rhs);
    }
    case SK::R: {
        auto lhs = nnf(f.lhs(), negated);
        auto rhs = nnf(f.rhs(), negated);
        return negated ? TF::until(lhs, rhs) : TF::release(lhs, rhs);
    }
    case SK::F:
        // !(true U a) == false R !a
        return negated ? TF::always(nnf(f.operand(), true)) : TF::eventually(nnf(f.operand(), false));
    case SK::G:
        return negated ? TF::eventually(nnf(f.operand(), true)) : TF::always(nnf(f.operand(), false));
    }
    throw InternalError("unhandled surface formula kind");
}

} // namespace

TemporalFormula to_nnf(const SurfaceFormula& f)
{
    return nnf(f, false);
}

SurfaceFormula to_surface(const FoFormula& f)
{
    using K = FoFormula::Kind;
    switch (f.kind()) {
    case K::True:
        return SurfaceFormula::top();
    case K::False:
        return SurfaceFormula::bottom();
    case K::Atom:
        return SurfaceFormula::atom(f.atom());
    case K::NegAtom:
        return SurfaceFormula::negation(SurfaceFormula::atom(f.atom()));
    case K::And:
        return SurfaceFormula::binary(SK::And, to_surface(f.lhs()), to_surface(f.rhs()));
    case K::Or:
        return SurfaceFormula::binary(SK::Or, to_surface(f.lhs()), to_surface(f.rhs()));
    case K::Exists:
        return SurfaceFormula::quantifier(SK::Exists, f.bound_var(), f.bound_sort(), to_surface(f.body()));
    case K::Forall:
        return SurfaceFormula::quantifier(SK::Forall, f.bound_var(), f.bound_sort(), to_surface(f.body()));
    }
    throw InternalError("unhandled first-order formula kind");
}

SurfaceFormula to_surface(const TemporalFormula& f)
{
    using K = TemporalFormula::Kind;
    switch (f.kind()) {
    case K::True:
        return SurfaceFormula::top();
    case K::False:
        return SurfaceFormula::bottom();
    case K::Fo:
        return to_surface(f.fo());
    case K::And:
        return SurfaceFormula::binary(SK::And, to_surface(f.lhs()), to_surface(f.rhs()));
    case K::Or:
        return SurfaceFormula::binary(SK::Or, to_surface(f.lhs()), to_surface(f.rhs()));
    case K::X:
        return SurfaceFormula::unary(SK::X, to_surface(f.operand()));
    case K::WX:
        return SurfaceFormula::unary(SK::WX, to_surface(f.operand()));
    case K::U:
        return SurfaceFormula::binary(SK::U, to_surface(f.lhs()), to_surface(f.rhs()));
    case K::R:
        return SurfaceFormula::binary(SK::R, to_surface(f.lhs()), to_surface(f.rhs()));
    }
    throw InternalError("unhandled temporal formula kind");
}

} // namespace ltlfmt
