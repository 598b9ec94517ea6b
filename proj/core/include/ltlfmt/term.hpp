#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ltlfmt/numeric.hpp"

namespace ltlfmt {

enum class ArithOp { Add, Sub, Neg, Mul, Div };

/// Immutable term. Copies share structure; equality is structural.
///
/// Next/WNext carry an operand term. In the flat fragment accepted by the
/// encoder that operand is always a state variable; flatten_next() rewrites
/// deeper nesting away.
class Term {
public:
    enum class Kind { StateVar, BoundVar, Const, IntLit, RatLit, Apply, Arith, Next, WNext };

    static Term state_var(std::string name);
    static Term bound_var(std::string name);
    static Term constant(std::string name);
    static Term int_lit(const Rational& value);
    static Term rat_lit(const Rational& value);
    static Term apply(std::string function, std::vector<Term> args);
    static Term arith(ArithOp op, std::vector<Term> args);
    static Term next(Term operand);
    static Term wnext(Term operand);

    Kind kind() const { return node_->kind; }
    const std::string& name() const { return node_->name; }
    const Rational& value() const { return node_->value; }
    ArithOp op() const { return node_->op; }
    const std::vector<Term>& args() const { return node_->args; }
    const Term& operand() const { return node_->args.front(); }
    std::size_t hash() const { return node_->hash; }

    bool is_literal() const { return kind() == Kind::IntLit || kind() == Kind::RatLit; }
    bool is_next() const { return kind() == Kind::Next || kind() == Kind::WNext; }

    /// True if some Next (strong) or WNext (weak) node occurs.
    bool contains_next() const;
    bool contains_wnext() const;
    /// Deepest chain of nested Next/WNext nodes.
    int next_depth() const;

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node {
        Kind kind;
        std::string name;
        Rational value;
        ArithOp op = ArithOp::Add;
        std::vector<Term> args;
        std::size_t hash = 0;
    };
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Term make(Node node);

    std::shared_ptr<const Node> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

} // namespace ltlfmt
