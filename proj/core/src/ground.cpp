#include "ltlfmt/encoder/ground.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ltlfmt/errors.hpp"

namespace ltlfmt {

GroundTerm GroundTerm::stepped_var(std::string name, std::size_t step)
{
    return GroundTerm(std::make_shared<const Node>(Node{Kind::SteppedVar, std::move(name), step, {}, ArithOp::Add, {}}));
}

GroundTerm GroundTerm::bound(std::string name)
{
    return GroundTerm(std::make_shared<const Node>(Node{Kind::Bound, std::move(name), 0, {}, ArithOp::Add, {}}));
}

GroundTerm GroundTerm::constant(std::string name)
{
    return GroundTerm(std::make_shared<const Node>(Node{Kind::Const, std::move(name), 0, {}, ArithOp::Add, {}}));
}

GroundTerm GroundTerm::element(std::string sort, std::size_t id)
{
    return GroundTerm(std::make_shared<const Node>(Node{Kind::Element, std::move(sort), id, {}, ArithOp::Add, {}}));
}

GroundTerm GroundTerm::int_lit(const Rational& v)
{
    return GroundTerm(std::make_shared<const Node>(Node{Kind::IntLit, {}, 0, v, ArithOp::Add, {}}));
}

GroundTerm GroundTerm::real_lit(const Rational& v)
{
    return GroundTerm(std::make_shared<const Node>(Node{Kind::RealLit, {}, 0, v, ArithOp::Add, {}}));
}

GroundTerm GroundTerm::apply(std::string function, std::vector<GroundTerm> args)
{
    return GroundTerm(std::make_shared<const Node>(Node{Kind::Apply, std::move(function), 0, {}, ArithOp::Add, std::move(args)}));
}

GroundTerm GroundTerm::arith(ArithOp op, std::vector<GroundTerm> args)
{
    return GroundTerm(std::make_shared<const Node>(Node{Kind::Arith, {}, 0, {}, op, std::move(args)}));
}

bool operator==(const GroundTerm& a, const GroundTerm& b)
{
    if (a.node_ == b.node_)
        return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.name == y.name && x.index == y.index && x.value == y.value && x.op == y.op && x.args == y.args;
}

GroundFormula GroundFormula::make(Node n) { return GroundFormula(std::make_shared<const Node>(std::move(n))); }

GroundFormula GroundFormula::top() { return make({Kind::True}); }
GroundFormula GroundFormula::bottom() { return make({Kind::False}); }

GroundFormula GroundFormula::step_lit(std::size_t step)
{
    Node n{Kind::StepLit};
    n.step = step;
    return make(std::move(n));
}

GroundFormula GroundFormula::grounded(std::size_t closure_id, std::size_t step)
{
    Node n{Kind::Grounded};
    n.step = step;
    n.id = closure_id;
    return make(std::move(n));
}

GroundFormula GroundFormula::atom(Relation r, std::string predicate, std::vector<GroundTerm> args)
{
    Node n{Kind::Atom};
    n.relation = r;
    n.name = std::move(predicate);
    n.args = std::move(args);
    return make(std::move(n));
}

GroundFormula GroundFormula::negation(GroundFormula f)
{
    if (f.kind() == Kind::True)
        return bottom();
    if (f.kind() == Kind::False)
        return top();
    Node n{Kind::Not};
    n.children = {std::move(f)};
    return make(std::move(n));
}

namespace {

template <typename Make>
GroundFormula junction(std::vector<GroundFormula> fs, GroundFormula::Kind neutral, GroundFormula::Kind absorbing, Make make)
{
    std::vector<GroundFormula> kept;
    for (auto& f : fs) {
        if (f.kind() == absorbing)
            return f;
        if (f.kind() != neutral)
            kept.push_back(std::move(f));
    }
    return make(std::move(kept));
}

} // namespace

GroundFormula GroundFormula::conj(std::vector<GroundFormula> fs)
{
    return junction(std::move(fs), Kind::True, Kind::False, [](std::vector<GroundFormula> kept) {
        if (kept.empty())
            return top();
        if (kept.size() == 1)
            return kept.front();
        Node n{Kind::And};
        n.children = std::move(kept);
        return make(std::move(n));
    });
}

GroundFormula GroundFormula::disj(std::vector<GroundFormula> fs)
{
    return junction(std::move(fs), Kind::False, Kind::True, [](std::vector<GroundFormula> kept) {
        if (kept.empty())
            return bottom();
        if (kept.size() == 1)
            return kept.front();
        Node n{Kind::Or};
        n.children = std::move(kept);
        return make(std::move(n));
    });
}

GroundFormula GroundFormula::implies(GroundFormula a, GroundFormula b)
{
    Node n{Kind::Implies};
    n.children = {std::move(a), std::move(b)};
    return make(std::move(n));
}

GroundFormula GroundFormula::iff(GroundFormula a, GroundFormula b)
{
    Node n{Kind::Iff};
    n.children = {std::move(a), std::move(b)};
    return make(std::move(n));
}

GroundFormula GroundFormula::exists(std::string var, Sort sort, GroundFormula body)
{
    Node n{Kind::Exists};
    n.name = std::move(var);
    n.sort = std::move(sort);
    n.children = {std::move(body)};
    return make(std::move(n));
}

GroundFormula GroundFormula::forall(std::string var, Sort sort, GroundFormula body)
{
    Node n{Kind::Forall};
    n.name = std::move(var);
    n.sort = std::move(sort);
    n.children = {std::move(body)};
    return make(std::move(n));
}

bool operator==(const GroundFormula& a, const GroundFormula& b)
{
    if (a.node_ == b.node_)
        return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.step == y.step && x.id == y.id && x.relation == y.relation && x.name == y.name
        && x.args == y.args && x.children == y.children && x.sort == y.sort;
}

std::string stepped_name(const std::string& var, std::size_t step) { return var + "@" + std::to_string(step); }
std::string step_lit_name(std::size_t step) { return "_l@" + std::to_string(step); }

std::string grounded_name(std::size_t closure_id, std::size_t step)
{
    return "_g@" + std::to_string(closure_id) + "@" + std::to_string(step);
}

std::string element_name(const std::string& sort, std::size_t id) { return "_e@" + sort + "@" + std::to_string(id); }

std::string smt_symbol(const std::string& name)
{
    static const std::set<std::string> reserved{
        "_", "!", "as", "let", "exists", "forall", "match", "par", "and", "or", "not", "xor", "=>", "ite",
        "distinct", "true", "false", "Bool", "Int", "Real", "div", "mod", "abs", "to_real", "to_int", "is_int",
        "select", "store", "Array", "NUMERAL", "DECIMAL", "STRING", "BINARY", "HEXADECIMAL", "assert",
        "check-sat", "declare-fun", "declare-const", "define-fun", "push", "pop"};
    bool plain = !name.empty() && !std::isdigit(static_cast<unsigned char>(name.front()))
        && std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
    if (plain && !reserved.contains(name))
        return name;
    return "|" + name + "|";
}

std::string smt_sort(const Sort& sort)
{
    switch (sort.kind()) {
    case Sort::Kind::Int:
        return "Int";
    case Sort::Kind::Real:
        return "Real";
    case Sort::Kind::Uninterpreted:
        return smt_symbol(sort.name());
    }
    return {};
}

namespace {

std::string real_literal(const mpz_class& z) { return z.get_str() + ".0"; }

std::string literal(const Rational& v, bool real)
{
    Rational mag = abs(v);
    std::string s;
    if (!real)
        s = mag.get_num().get_str();
    else if (mag.get_den() == 1)
        s = real_literal(mag.get_num());
    else
        s = "(/ " + real_literal(mag.get_num()) + " " + real_literal(mag.get_den()) + ")";
    return v < 0 ? "(- " + s + ")" : s;
}

std::string application(const std::string& head, const std::vector<std::string>& args)
{
    if (args.empty())
        return head;
    std::string out = "(" + head;
    for (const auto& a : args)
        out += " " + a;
    return out + ")";
}

const char* arith_head(ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return "+";
    case ArithOp::Sub:
    case ArithOp::Neg:
        return "-";
    case ArithOp::Mul:
        return "*";
    case ArithOp::Div:
        return "/";
    }
    return "?";
}

const char* relation_head(Relation r)
{
    switch (r) {
    case Relation::Eq:
        return "=";
    case Relation::Ne:
        return "distinct";
    case Relation::Lt:
        return "<";
    case Relation::Le:
        return "<=";
    case Relation::Gt:
        return ">";
    case Relation::Ge:
        return ">=";
    case Relation::Predicate:
        break;
    }
    throw InternalError("predicate has no relation symbol");
}

} // namespace

std::string to_smtlib(const GroundTerm& t)
{
    std::vector<std::string> args;
    for (const auto& a : t.args())
        args.push_back(to_smtlib(a));
    switch (t.kind()) {
    case GroundTerm::Kind::SteppedVar:
        return smt_symbol(stepped_name(t.name(), t.step()));
    case GroundTerm::Kind::Bound:
    case GroundTerm::Kind::Const:
        return smt_symbol(t.name());
    case GroundTerm::Kind::Element:
        return smt_symbol(element_name(t.name(), t.element_id()));
    case GroundTerm::Kind::IntLit:
        return literal(t.value(), false);
    case GroundTerm::Kind::RealLit:
        return literal(t.value(), true);
    case GroundTerm::Kind::Apply:
        return application(smt_symbol(t.name()), args);
    case GroundTerm::Kind::Arith:
        return application(arith_head(t.op()), args);
    }
    throw InternalError("unhandled ground term kind");
}

std::string to_smtlib(const GroundFormula& f)
{
    using K = GroundFormula::Kind;
    std::vector<std::string> parts;
    for (const auto& c : f.children())
        parts.push_back(to_smtlib(c));
    switch (f.kind()) {
    case K::True:
        return "true";
    case K::False:
        return "false";
    case K::StepLit:
        return smt_symbol(step_lit_name(f.step()));
    case K::Grounded:
        return smt_symbol(grounded_name(f.closure_id(), f.step()));
    case K::Atom: {
        std::vector<std::string> args;
        for (const auto& a : f.args())
            args.push_back(to_smtlib(a));
        if (f.relation() == Relation::Predicate)
            return application(smt_symbol(f.predicate()), args);
        return application(relation_head(f.relation()), args);
    }
    case K::Not:
        return application("not", parts);
    case K::And:
        return application("and", parts);
    case K::Or:
        return application("or", parts);
    case K::Implies:
        return application("=>", parts);
    case K::Iff:
        return application("=", parts);
    case K::Exists:
    case K::Forall:
        return "(" + std::string(f.kind() == K::Exists ? "exists" : "forall") + " ((" + smt_symbol(f.bound_var()) + " "
            + smt_sort(f.bound_sort()) + ")) " + parts.front() + ")";
    }
    throw InternalError("unhandled ground formula kind");
}

bool has_quantifier(const GroundFormula& f)
{
    bool found = false;
    for_each_node(f, [&](const GroundFormula& g) {
        found = found || g.kind() == GroundFormula::Kind::Exists || g.kind() == GroundFormula::Kind::Forall;
    });
    return found;
}

} // namespace ltlfmt
