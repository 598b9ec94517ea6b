#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ltlfmt/formula.hpp"

namespace ltlfmt {

/// Full input syntax: free negation, implication and the F/G shortcuts.
/// to_nnf() turns it into a TemporalFormula.
class SurfaceFormula {
public:
    enum class Kind { True, False, Atom, Not, And, Or, Implies, Exists, Forall, X, WX, U, R, F, G };

    static SurfaceFormula top();
    static SurfaceFormula bottom();
    static SurfaceFormula atom(Atom a);
    static SurfaceFormula unary(Kind kind, SurfaceFormula operand);
    static SurfaceFormula binary(Kind kind, SurfaceFormula lhs, SurfaceFormula rhs);
    static SurfaceFormula quantifier(Kind kind, std::string var, Sort sort, SurfaceFormula body);

    static SurfaceFormula negation(SurfaceFormula f) { return unary(Kind::Not, std::move(f)); }

    Kind kind() const { return node_->kind; }
    const Atom& atom() const { return *node_->atom; }
    const SurfaceFormula& operand() const { return node_->children[0]; }
    const SurfaceFormula& lhs() const { return node_->children[0]; }
    const SurfaceFormula& rhs() const { return node_->children[1]; }
    const std::vector<SurfaceFormula>& children() const { return node_->children; }
    const std::string& bound_var() const { return node_->var; }
    const Sort& bound_sort() const { return *node_->sort; }

    bool is_temporal_operator() const;

private:
    struct Node {
        Kind kind;
        std::optional<Atom> atom;
        std::vector<SurfaceFormula> children;
        std::string var;
        std::optional<Sort> sort;
    };
    explicit SurfaceFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

} // namespace ltlfmt
