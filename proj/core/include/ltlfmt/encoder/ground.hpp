#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ltlfmt/formula.hpp"
#include "ltlfmt/numeric.hpp"
#include "ltlfmt/signature.hpp"

namespace ltlfmt {

/// Term over the stepped signature: `x@i` copies of the state variables,
/// plus everything rigid from the user signature.
class GroundTerm {
public:
    enum class Kind { SteppedVar, Bound, Const, Element, IntLit, RealLit, Apply, Arith };

    static GroundTerm stepped_var(std::string name, std::size_t step);
    static GroundTerm bound(std::string name);
    static GroundTerm constant(std::string name);
    /// A named element of an uninterpreted sort, `_e@<sort>@<id>`.
    static GroundTerm element(std::string sort, std::size_t id);
    static GroundTerm int_lit(const Rational& v);
    static GroundTerm real_lit(const Rational& v);
    static GroundTerm apply(std::string function, std::vector<GroundTerm> args);
    static GroundTerm arith(ArithOp op, std::vector<GroundTerm> args);

    Kind kind() const { return node_->kind; }
    /// Variable, constant, function or sort name.
    const std::string& name() const { return node_->name; }
    std::size_t step() const { return node_->index; }
    std::size_t element_id() const { return node_->index; }
    const Rational& value() const { return node_->value; }
    ArithOp op() const { return node_->op; }
    const std::vector<GroundTerm>& args() const { return node_->args; }

    friend bool operator==(const GroundTerm& a, const GroundTerm& b);

private:
    struct Node {
        Kind kind;
        std::string name;
        std::size_t index = 0;
        Rational value;
        ArithOp op = ArithOp::Add;
        std::vector<GroundTerm> args;
    };
    explicit GroundTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

/// Quantifier-free-in-time first-order formula over the stepped signature,
/// with step literals `_l@i` and grounded tomorrows `_g@<id>@<i>`.
///
/// conj()/disj() drop neutral operands and short-circuit on absorbing ones;
/// no other simplification takes place.
class GroundFormula {
public:
    enum class Kind { True, False, StepLit, Grounded, Atom, Not, And, Or, Implies, Iff, Exists, Forall };

    static GroundFormula top();
    static GroundFormula bottom();
    static GroundFormula step_lit(std::size_t step);
    static GroundFormula grounded(std::size_t closure_id, std::size_t step);
    static GroundFormula atom(Relation r, std::string predicate, std::vector<GroundTerm> args);
    static GroundFormula negation(GroundFormula f);
    static GroundFormula conj(std::vector<GroundFormula> fs);
    static GroundFormula conj(GroundFormula a, GroundFormula b) { return conj(std::vector{std::move(a), std::move(b)}); }
    static GroundFormula disj(std::vector<GroundFormula> fs);
    static GroundFormula disj(GroundFormula a, GroundFormula b) { return disj(std::vector{std::move(a), std::move(b)}); }
    static GroundFormula implies(GroundFormula a, GroundFormula b);
    static GroundFormula iff(GroundFormula a, GroundFormula b);
    static GroundFormula exists(std::string var, Sort sort, GroundFormula body);
    static GroundFormula forall(std::string var, Sort sort, GroundFormula body);

    Kind kind() const { return node_->kind; }
    std::size_t step() const { return node_->step; }
    std::size_t closure_id() const { return node_->id; }
    Relation relation() const { return node_->relation; }
    const std::string& predicate() const { return node_->name; }
    const std::vector<GroundTerm>& args() const { return node_->args; }
    const std::vector<GroundFormula>& children() const { return node_->children; }
    const std::string& bound_var() const { return node_->name; }
    const Sort& bound_sort() const { return node_->sort; }

    friend bool operator==(const GroundFormula& a, const GroundFormula& b);

private:
    struct Node {
        Kind kind;
        std::size_t step = 0;
        std::size_t id = 0;
        Relation relation = Relation::Predicate;
        std::string name{};
        std::vector<GroundTerm> args{};
        std::vector<GroundFormula> children{};
        Sort sort = Sort::integer();
    };
    explicit GroundFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static GroundFormula make(Node n);

    std::shared_ptr<const Node> node_;
};

/// `x@3`, `_l@0`, `_g@4@2`, `_e@Job@1`: unquoted symbol names.
std::string stepped_name(const std::string& var, std::size_t step);
std::string step_lit_name(std::size_t step);
std::string grounded_name(std::size_t closure_id, std::size_t step);
std::string element_name(const std::string& sort, std::size_t id);

/// SMT-LIB symbol, `|...|`-quoted unless it is a plain non-reserved symbol.
std::string smt_symbol(const std::string& name);
std::string smt_sort(const Sort& sort);

/// Canonical SMT-LIB rendering.
std::string to_smtlib(const GroundTerm& t);
std::string to_smtlib(const GroundFormula& f);

/// Walks every term (including subterms) in the formula.
template <typename Fn>
void for_each_term(const GroundTerm& t, Fn&& fn)
{
    fn(t);
    for (const auto& a : t.args())
        for_each_term(a, fn);
}

template <typename Fn>
void for_each_term(const GroundFormula& f, Fn&& fn)
{
    for (const auto& t : f.args())
        for_each_term(t, fn);
    for (const auto& c : f.children())
        for_each_term(c, fn);
}

template <typename Fn>
void for_each_node(const GroundFormula& f, Fn&& fn)
{
    fn(f);
    for (const auto& c : f.children())
        for_each_node(c, fn);
}

bool has_quantifier(const GroundFormula& f);

} // namespace ltlfmt
