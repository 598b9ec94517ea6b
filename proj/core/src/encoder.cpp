#include "ltlfmt/encoder/encoder.hpp"

#include "ltlfmt/errors.hpp"

namespace ltlfmt {

GroundTerm step_term(const Term& t, std::size_t i)
{
    std::vector<GroundTerm> args;
    switch (t.kind()) {
    case Term::Kind::StateVar:
        return GroundTerm::stepped_var(t.name(), i);
    case Term::Kind::BoundVar:
        return GroundTerm::bound(t.name());
    case Term::Kind::Const:
        return GroundTerm::constant(t.name());
    case Term::Kind::IntLit:
        return GroundTerm::int_lit(t.value());
    case Term::Kind::RatLit:
        return GroundTerm::real_lit(t.value());
    case Term::Kind::Next:
    case Term::Kind::WNext:
        return step_term(t.operand(), i + 1);
    case Term::Kind::Apply:
        for (const auto& a : t.args())
            args.push_back(step_term(a, i));
        return GroundTerm::apply(t.name(), std::move(args));
    case Term::Kind::Arith:
        for (const auto& a : t.args())
            args.push_back(step_term(a, i));
        return GroundTerm::arith(t.op(), std::move(args));
    }
    throw InternalError("unhandled term kind");
}

namespace {

GroundFormula step_atom(const Atom& a, std::size_t i)
{
    std::vector<GroundTerm> args;
    for (const auto& t : a.args)
        args.push_back(step_term(t, i));
    return GroundFormula::atom(a.relation, a.predicate, std::move(args));
}

GroundFormula label_atom(const Atom& a, std::size_t i)
{
    auto stepped = step_atom(a, i);
    switch (classify_atom(a)) {
    case AtomStrength::Strong:
        return GroundFormula::conj(GroundFormula::step_lit(i), stepped);
    case AtomStrength::Weak:
        return GroundFormula::implies(GroundFormula::step_lit(i), stepped);
    case AtomStrength::Rigid:
        break;
    }
    return stepped;
}

} // namespace

GroundFormula label_L(const FoFormula& f, std::size_t i)
{
    using K = FoFormula::Kind;
    switch (f.kind()) {
    case K::True:
        return GroundFormula::top();
    case K::False:
        return GroundFormula::bottom();
    case K::Atom:
        return label_atom(f.atom(), i);
    case K::NegAtom:
        return GroundFormula::negation(label_atom(f.atom(), i));
    case K::And:
        return GroundFormula::conj(label_L(f.lhs(), i), label_L(f.rhs(), i));
    case K::Or:
        return GroundFormula::disj(label_L(f.lhs(), i), label_L(f.rhs(), i));
    case K::Exists:
        return GroundFormula::exists(f.bound_var(), f.bound_sort(), label_L(f.body(), i));
    case K::Forall:
        return GroundFormula::forall(f.bound_var(), f.bound_sort(), label_L(f.body(), i));
    }
    throw InternalError("unhandled first-order formula kind");
}

TemporalFormula snf(const TemporalFormula& f)
{
    using K = TemporalFormula::Kind;
    switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Fo:
    case K::X:
    case K::WX:
        return f;
    case K::And:
        return TemporalFormula::conj(snf(f.lhs()), snf(f.rhs()));
    case K::Or:
        return TemporalFormula::disj(snf(f.lhs()), snf(f.rhs()));
    case K::U:
        return TemporalFormula::disj(snf(f.rhs()), TemporalFormula::conj(snf(f.lhs()), TemporalFormula::tomorrow(f)));
    case K::R:
        return TemporalFormula::conj(snf(f.rhs()), TemporalFormula::disj(snf(f.lhs()), TemporalFormula::weak_tomorrow(f)));
    }
    throw InternalError("unhandled temporal formula kind");
}

GroundFormula ground(const TemporalFormula& psi, std::size_t i, const ClosureTable& ct)
{
    using K = TemporalFormula::Kind;
    switch (psi.kind()) {
    case K::True:
        return GroundFormula::top();
    case K::False:
        return GroundFormula::bottom();
    case K::Fo:
        return label_L(psi.fo(), i);
    case K::X:
    case K::WX:
        return GroundFormula::grounded(ct.id_of(psi), i);
    case K::And:
        return GroundFormula::conj(ground(psi.lhs(), i, ct), ground(psi.rhs(), i, ct));
    case K::Or:
        return GroundFormula::disj(ground(psi.lhs(), i, ct), ground(psi.rhs(), i, ct));
    case K::U:
    case K::R:
        throw InternalError("ground() needs stepped normal form");
    }
    throw InternalError("unhandled temporal formula kind");
}

GroundFormula omega(const BranchSummary& b)
{
    std::vector<GroundFormula> parts;
    for (std::size_t i = 0; i < b.poised_labels.size(); ++i)
        for (const auto& f : b.poised_labels[i]) {
            if (f.kind() == TemporalFormula::Kind::Fo)
                parts.push_back(label_L(f.fo(), i));
            else if (f.kind() == TemporalFormula::Kind::False)
                parts.push_back(GroundFormula::bottom());
            else if (f.kind() != TemporalFormula::Kind::True)
                throw InternalError("omega over a formula that is not first-order");
        }
    for (std::size_t i = 0; i + 1 < b.poised_labels.size(); ++i)
        parts.push_back(GroundFormula::step_lit(i));
    return GroundFormula::conj(std::move(parts));
}

Encoder::Encoder(const TemporalFormula& phi) : table_(phi)
{
    snf_.reserve(table_.size());
    for (const auto& f : table_.entries())
        snf_.push_back(f.is_tomorrow() ? snf(f.operand()) : snf(f));
}

const TemporalFormula& Encoder::snf_of(std::size_t id) const { return snf_.at(id); }

GroundFormula Encoder::unravel_base() const { return ground(snf(table_.root()), 0, table_); }

GroundFormula Encoder::unravel_delta(std::size_t k) const
{
    std::vector<GroundFormula> parts{GroundFormula::step_lit(k)};
    for (const auto* requests : {&table_.xr(), &table_.wxr()})
        for (auto id : *requests)
            parts.push_back(GroundFormula::iff(GroundFormula::grounded(id, k), ground(snf_of(id), k + 1, table_)));
    return GroundFormula::conj(std::move(parts));
}

GroundFormula Encoder::empty_encoding(std::size_t k) const
{
    std::vector<GroundFormula> parts;
    for (auto id : table_.xr())
        parts.push_back(GroundFormula::negation(GroundFormula::grounded(id, k)));
    parts.push_back(GroundFormula::negation(GroundFormula::step_lit(k)));
    return GroundFormula::conj(std::move(parts));
}

GroundFormula Encoder::unravel(std::size_t k) const
{
    std::vector<GroundFormula> parts{unravel_base()};
    for (std::size_t j = 0; j < k; ++j)
        parts.push_back(unravel_delta(j));
    return GroundFormula::conj(std::move(parts));
}

} // namespace ltlfmt
