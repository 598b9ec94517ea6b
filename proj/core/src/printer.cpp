#include "ltlfmt/printer.hpp"

#include <sstream>

#include "ltlfmt/errors.hpp"
#include "ltlfmt/nnf.hpp"

namespace ltlfmt {

namespace {

std::string literal(const Rational& value, bool real)
{
    if (!real)
        return to_string(value);
    if (auto dec = to_decimal(value))
        return *dec;
    // not a finite decimal: spell it as a quotient
    return "(" + *to_decimal(Rational(value.get_num())) + " / " + value.get_den().get_str() + ")";
}

bool needs_parens_as_operand(const Term& t)
{
    return t.kind() == Term::Kind::Arith;
}

std::string operand(const Term& t)
{
    auto s = to_string(t);
    return needs_parens_as_operand(t) ? "(" + s + ")" : s;
}

const char* relation_symbol(Relation r)
{
    switch (r) {
    case Relation::Eq:
        return "=";
    case Relation::Ne:
        return "!=";
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
    return "?";
}

// Binding strength, tighter first.
enum Level { Atomic = 0, Unary = 1, Temporal = 2, Conj = 3, Disj = 4, Impl = 5 };

using SK = SurfaceFormula::Kind;

Level level_of(const SurfaceFormula& f)
{
    switch (f.kind()) {
    case SK::True:
    case SK::False:
    case SK::Atom:
        return Atomic;
    case SK::Not:
    case SK::X:
    case SK::WX:
    case SK::F:
    case SK::G:
    case SK::Exists:
    case SK::Forall:
        return Unary;
    case SK::U:
        return f.lhs().kind() == SK::True ? Unary : Temporal;
    case SK::R:
        return f.lhs().kind() == SK::False ? Unary : Temporal;
    case SK::And:
        return Conj;
    case SK::Or:
        return Disj;
    case SK::Implies:
        return Impl;
    }
    return Impl;
}

void print_surface(std::ostream& out, const SurfaceFormula& f, Level allowed);

void print_operand_of_unary(std::ostream& out, const SurfaceFormula& f)
{
    // relations read better wrapped: X(x = 1)
    if (level_of(f) == Atomic && f.kind() == SK::Atom && f.atom().relation != Relation::Predicate) {
        out << "(" << to_string(f.atom()) << ")";
        return;
    }
    std::ostringstream operand;
    print_surface(operand, f, Unary);
    auto text = operand.str();
    if (text.front() != '(')
        out << " ";
    out << text;
}

void print_surface(std::ostream& out, const SurfaceFormula& f, Level allowed)
{
    Level level = level_of(f);
    bool wrap = level > allowed;
    if (wrap)
        out << "(";
    switch (f.kind()) {
    case SK::True:
        out << "true";
        break;
    case SK::False:
        out << "false";
        break;
    case SK::Atom:
        out << to_string(f.atom());
        break;
    case SK::Not:
        out << "!";
        print_operand_of_unary(out, f.operand());
        break;
    case SK::X:
    case SK::WX:
    case SK::F:
    case SK::G:
        out << (f.kind() == SK::X ? "X" : f.kind() == SK::WX ? "wX" : f.kind() == SK::F ? "F" : "G");
        print_operand_of_unary(out, f.operand());
        break;
    case SK::Exists:
    case SK::Forall:
        out << (f.kind() == SK::Exists ? "exists " : "forall ") << f.bound_var() << ":" << f.bound_sort().to_string()
            << " .";
        print_operand_of_unary(out, f.operand());
        break;
    case SK::U:
    case SK::R:
        if (level == Unary) {
            out << (f.kind() == SK::U ? "F" : "G");
            print_operand_of_unary(out, f.rhs());
            break;
        }
        print_surface(out, f.lhs(), Unary);
        out << (f.kind() == SK::U ? " U " : " R ");
        print_surface(out, f.rhs(), Temporal);
        break;
    case SK::And:
        print_surface(out, f.lhs(), Conj);
        out << " & ";
        print_surface(out, f.rhs(), Temporal);
        break;
    case SK::Or:
        print_surface(out, f.lhs(), Disj);
        out << " | ";
        print_surface(out, f.rhs(), Conj);
        break;
    case SK::Implies:
        print_surface(out, f.lhs(), Disj);
        out << " -> ";
        print_surface(out, f.rhs(), Impl);
        break;
    }
    if (wrap)
        out << ")";
}

} // namespace

std::string to_string(const Term& t)
{
    using K = Term::Kind;
    switch (t.kind()) {
    case K::StateVar:
    case K::BoundVar:
    case K::Const:
        return t.name();
    case K::IntLit:
        return literal(t.value(), false);
    case K::RatLit:
        return literal(t.value(), true);
    case K::Apply: {
        std::string s = t.name() + "(";
        for (std::size_t i = 0; i < t.args().size(); ++i)
            s += (i ? ", " : "") + to_string(t.args()[i]);
        return s + ")";
    }
    case K::Arith:
        switch (t.op()) {
        case ArithOp::Neg: {
            const Term& o = t.operand();
            bool wrap = o.is_literal() || o.kind() == K::Arith;
            return wrap ? "-(" + to_string(o) + ")" : "-" + to_string(o);
        }
        case ArithOp::Add:
            return operand(t.args()[0]) + " + " + operand(t.args()[1]);
        case ArithOp::Sub:
            return operand(t.args()[0]) + " - " + operand(t.args()[1]);
        case ArithOp::Mul:
            return operand(t.args()[0]) + " * " + operand(t.args()[1]);
        case ArithOp::Div:
            return operand(t.args()[0]) + " / " + operand(t.args()[1]);
        }
        break;
    case K::Next:
        return "next(" + to_string(t.operand()) + ")";
    case K::WNext:
        return "wnext(" + to_string(t.operand()) + ")";
    }
    throw InternalError("unhandled term kind");
}

std::string to_string(const Atom& a)
{
    if (a.relation == Relation::Predicate) {
        if (a.args.empty())
            return a.predicate;
        std::string s = a.predicate + "(";
        for (std::size_t i = 0; i < a.args.size(); ++i)
            s += (i ? ", " : "") + to_string(a.args[i]);
        return s + ")";
    }
    return to_string(a.args[0]) + " " + relation_symbol(a.relation) + " " + to_string(a.args[1]);
}

std::string to_string(const SurfaceFormula& f)
{
    std::ostringstream out;
    print_surface(out, f, Impl);
    return out.str();
}

std::string to_string(const FoFormula& f)
{
    return to_string(to_surface(f));
}

std::string to_string(const TemporalFormula& f)
{
    return to_string(to_surface(f));
}

std::string print_declarations(const Signature& sig)
{
    std::ostringstream out;
    for (const auto& s : sig.sorts())
        out << "sort " << s << ";\n";
    for (const auto& [name, sort] : sig.state_vars())
        out << "var " << name << " : " << sort.to_string() << ";\n";
    for (const auto& [name, sort] : sig.constants())
        out << "const " << name << " : " << sort.to_string() << ";\n";
    for (const auto& [name, decl] : sig.functions()) {
        out << "fun " << name << "(";
        for (std::size_t i = 0; i < decl.args.size(); ++i)
            out << (i ? ", " : "") << decl.args[i].to_string();
        out << ") : " << decl.result.to_string() << ";\n";
    }
    for (const auto& [name, decl] : sig.predicates()) {
        out << "pred " << name;
        if (!decl.args.empty()) {
            out << "(";
            for (std::size_t i = 0; i < decl.args.size(); ++i)
                out << (i ? ", " : "") << decl.args[i].to_string();
            out << ")";
        }
        out << ";\n";
    }
    return out.str();
}

std::string print(const TemporalFormula& f, const Signature& sig)
{
    return print_declarations(sig) + "formula: " + to_string(f) + ";\n";
}

} // namespace ltlfmt
