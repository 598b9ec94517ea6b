#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ltlfmt/signature.hpp"
#include "ltlfmt/term.hpp"

namespace ltlfmt {

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge, Predicate };

/// p(t1,...,tk) for a user predicate, or a built-in binary relation.
struct Atom {
    Relation relation = Relation::Predicate;
    std::string predicate; // only for Relation::Predicate
    std::vector<Term> args;

    static Atom rel(Relation r, Term lhs, Term rhs) { return Atom{r, {}, {std::move(lhs), std::move(rhs)}}; }
    static Atom pred(std::string name, std::vector<Term> args) { return Atom{Relation::Predicate, std::move(name), std::move(args)}; }

    std::size_t hash() const;
    friend bool operator==(const Atom&, const Atom&) = default;
};

/// First-order layer: atoms, negated atoms, connectives and quantifiers.
/// Negation only occurs directly on atoms.
class FoFormula {
public:
    enum class Kind { True, False, Atom, NegAtom, And, Or, Exists, Forall };

    static FoFormula top();
    static FoFormula bottom();
    static FoFormula atom(Atom a);
    static FoFormula neg_atom(Atom a);
    static FoFormula conj(FoFormula lhs, FoFormula rhs);
    static FoFormula disj(FoFormula lhs, FoFormula rhs);
    static FoFormula exists(std::string var, Sort sort, FoFormula body);
    static FoFormula forall(std::string var, Sort sort, FoFormula body);

    Kind kind() const { return node_->kind; }
    const Atom& atom() const { return *node_->atom; }
    const FoFormula& lhs() const { return node_->children[0]; }
    const FoFormula& rhs() const { return node_->children[1]; }
    const FoFormula& body() const { return node_->children[0]; }
    const std::string& bound_var() const { return node_->var; }
    const Sort& bound_sort() const { return *node_->sort; }
    std::size_t hash() const { return node_->hash; }

    bool is_literal() const { return kind() == Kind::Atom || kind() == Kind::NegAtom; }
    bool is_quantifier() const { return kind() == Kind::Exists || kind() == Kind::Forall; }

    friend bool operator==(const FoFormula& a, const FoFormula& b);

private:
    struct Node {
        Kind kind;
        std::optional<Atom> atom;
        std::vector<FoFormula> children;
        std::string var;
        std::optional<Sort> sort;
        std::size_t hash = 0;
    };
    explicit FoFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static FoFormula make(Node node);

    std::shared_ptr<const Node> node_;
};

/// Temporal layer in negation normal form.
///
/// Canonical form keeps Boolean structure outside quantifiers at this level:
/// an Fo leaf holds a literal or a quantified formula. from_fo() lifts
/// top-level connectives accordingly.
class TemporalFormula {
public:
    enum class Kind { True, False, Fo, And, Or, X, WX, U, R };

    static TemporalFormula top();
    static TemporalFormula bottom();
    static TemporalFormula from_fo(const FoFormula& f);
    static TemporalFormula conj(TemporalFormula lhs, TemporalFormula rhs);
    static TemporalFormula disj(TemporalFormula lhs, TemporalFormula rhs);
    static TemporalFormula tomorrow(TemporalFormula f);
    static TemporalFormula weak_tomorrow(TemporalFormula f);
    static TemporalFormula until(TemporalFormula lhs, TemporalFormula rhs);
    static TemporalFormula release(TemporalFormula lhs, TemporalFormula rhs);
    /// F f, i.e. true U f.
    static TemporalFormula eventually(TemporalFormula f);
    /// G f, i.e. false R f.
    static TemporalFormula always(TemporalFormula f);

    Kind kind() const { return node_->kind; }
    const FoFormula& fo() const { return *node_->fo; }
    const TemporalFormula& lhs() const { return node_->children[0]; }
    const TemporalFormula& rhs() const { return node_->children[1]; }
    const TemporalFormula& operand() const { return node_->children[0]; }
    const std::vector<TemporalFormula>& children() const { return node_->children; }
    std::size_t hash() const { return node_->hash; }
    const void* identity() const { return node_.get(); }

    /// First-order (Fo, True, False), X or wX.
    bool is_elementary() const;
    bool is_first_order() const { return kind() == Kind::True || kind() == Kind::False || kind() == Kind::Fo; }
    bool is_tomorrow() const { return kind() == Kind::X || kind() == Kind::WX; }

    friend bool operator==(const TemporalFormula& a, const TemporalFormula& b);

private:
    struct Node {
        Kind kind;
        std::optional<FoFormula> fo;
        std::vector<TemporalFormula> children;
        std::size_t hash = 0;
    };
    explicit TemporalFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static TemporalFormula make(Node node);

    std::shared_ptr<const Node> node_;
};

struct TemporalFormulaHash {
    std::size_t operator()(const TemporalFormula& f) const { return f.hash(); }
};

/// Applies `fn` to every term occurring in the formula's atoms (top-level
/// terms only, not their subterms).
template <typename Fn>
void for_each_atom(const FoFormula& f, Fn&& fn)
{
    switch (f.kind()) {
    case FoFormula::Kind::Atom:
    case FoFormula::Kind::NegAtom:
        fn(f.atom());
        break;
    case FoFormula::Kind::And:
    case FoFormula::Kind::Or:
        for_each_atom(f.lhs(), fn);
        for_each_atom(f.rhs(), fn);
        break;
    case FoFormula::Kind::Exists:
    case FoFormula::Kind::Forall:
        for_each_atom(f.body(), fn);
        break;
    default:
        break;
    }
}

template <typename Fn>
void for_each_atom(const TemporalFormula& f, Fn&& fn)
{
    if (f.kind() == TemporalFormula::Kind::Fo)
        for_each_atom(f.fo(), fn);
    for (const auto& c : f.children())
        for_each_atom(c, fn);
}

bool has_quantifier(const TemporalFormula& f);

} // namespace ltlfmt
