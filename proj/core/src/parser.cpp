#include "ltlfmt/parser.hpp"

#include <cctype>
#include <set>

#include "ltlfmt/nnf.hpp"
#include "ltlfmt/sort_check.hpp"

namespace ltlfmt {

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

const std::set<std::string, std::less<>> kKeywords = {
    "sort", "var", "const", "fun", "pred", "formula", "init", "trans", "property", "logic", "true", "false",
    "X", "wX", "F", "G", "U", "R", "next", "wnext", "exists", "forall", "Int", "Real",
};

std::vector<Token> lex(std::string_view text)
{
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else
                ++column;
        }
    };

    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        int tl = line;
        int tc = column;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            std::string word(text.substr(i, j - i));
            if (word.front() == '_')
                throw ParseError(tl, tc, "identifiers may not begin with '_': " + word);
            tokens.push_back({Tok::Ident, word, tl, tc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            if (j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                    ++j;
            }
            tokens.push_back({Tok::Number, std::string(text.substr(i, j - i)), tl, tc});
            advance(j - i);
            continue;
        }
        static const char* const two_char[] = {"->", "!=", "<=", ">="};
        bool matched = false;
        for (const char* op : two_char) {
            if (text.substr(i, 2) == op) {
                tokens.push_back({Tok::Punct, op, tl, tc});
                advance(2);
                matched = true;
                break;
            }
        }
        if (matched)
            continue;
        if (std::string_view("(),;:.&|!=<>+-*/").find(c) != std::string_view::npos) {
            tokens.push_back({Tok::Punct, std::string(1, c), tl, tc});
            advance(1);
            continue;
        }
        throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({Tok::End, "", line, column});
    return tokens;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, Signature* sig) : tokens_(std::move(tokens)), sig_(sig) {}

    SourceFile file()
    {
        SourceFile out;
        while (!at_end()) {
            const Token& t = peek();
            if (t.kind != Tok::Ident)
                error(t, "expected a declaration or section, found '" + t.text + "'");
            if (t.text == "sort" || t.text == "var" || t.text == "const" || t.text == "fun" || t.text == "pred")
                declaration(out);
            else if (t.text == "logic") {
                next();
                expect(":");
                const Token& name = expect_ident("logic name");
                out.logic = name.text;
                expect(";");
            } else if (t.text == "formula" || t.text == "init" || t.text == "trans" || t.text == "property") {
                Token head = next();
                expect(":");
                for (const auto& s : out.sections)
                    if (s.name == head.text)
                        error(head, "duplicate section " + head.text);
                auto f = implies();
                expect(";");
                out.sections.push_back({head.text, f, head.line, head.column});
            } else
                error(t, "expected a declaration or section, found '" + t.text + "'");
        }
        out.signature = *sig_;
        return out;
    }

    SurfaceFormula formula_only()
    {
        auto f = implies();
        if (!at_end())
            error(peek(), "unexpected '" + peek().text + "' after formula");
        return f;
    }

private:
    [[noreturn]] void error(const Token& t, const std::string& message) { throw ParseError(t.line, t.column, message); }

    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
    bool at_end() const { return peek().kind == Tok::End; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    bool is(std::string_view text) const { return peek().kind != Tok::End && peek().text == text && peek().kind != Tok::Number; }

    bool accept(std::string_view text)
    {
        if (!is(text))
            return false;
        next();
        return true;
    }

    const Token& expect(std::string_view text)
    {
        if (!is(text))
            error(peek(), "expected '" + std::string(text) + "', found '" + describe(peek()) + "'");
        return next();
    }

    static std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : t.text; }

    const Token& expect_ident(const std::string& what)
    {
        if (peek().kind != Tok::Ident)
            error(peek(), "expected " + what + ", found '" + describe(peek()) + "'");
        return next();
    }

    const Token& expect_name(const std::string& what)
    {
        const Token& t = expect_ident(what);
        if (kKeywords.contains(t.text))
            error(t, "'" + t.text + "' is a reserved word");
        return t;
    }

    Sort sort()
    {
        const Token& t = expect_ident("a sort");
        if (t.text == "Int")
            return Sort::integer();
        if (t.text == "Real")
            return Sort::real();
        Sort s = Sort::uninterpreted(t.text);
        if (!sig_->has_sort(s))
            error(t, "undeclared sort " + t.text);
        return s;
    }

    std::vector<Sort> sort_list()
    {
        std::vector<Sort> sorts;
        expect("(");
        if (!is(")")) {
            do
                sorts.push_back(sort());
            while (accept(","));
        }
        expect(")");
        return sorts;
    }

    template <typename Fn>
    void declare(const Token& at, Fn&& fn)
    {
        try {
            fn();
        } catch (const SortError& e) {
            error(at, e.what());
        }
    }

    void declaration(SourceFile& out)
    {
        Token kw = next();
        if (kw.text == "sort") {
            const Token& name = expect_name("a sort name");
            declare(name, [&] { sig_->declare_sort(name.text); });
            out.declarations.push_back({Decl::Kind::Sort, name.text, {}, {}, name.line, name.column});
        } else if (kw.text == "var") {
            std::vector<Token> names{expect_name("a variable name")};
            while (accept(","))
                names.push_back(expect_name("a variable name"));
            expect(":");
            Sort s = sort();
            for (const auto& n : names) {
                declare(n, [&] { sig_->declare_var(n.text, s); });
                out.declarations.push_back({Decl::Kind::Var, n.text, {}, s, n.line, n.column});
            }
        } else if (kw.text == "const") {
            const Token& name = expect_name("a constant name");
            expect(":");
            Sort s = sort();
            declare(name, [&] { sig_->declare_constant(name.text, s); });
            out.declarations.push_back({Decl::Kind::Const, name.text, {}, s, name.line, name.column});
        } else if (kw.text == "fun") {
            const Token& name = expect_name("a function name");
            auto args = sort_list();
            expect(":");
            Sort result = sort();
            declare(name, [&] { sig_->declare_function(name.text, args, result); });
            out.declarations.push_back({Decl::Kind::Fun, name.text, args, result, name.line, name.column});
        } else {
            const Token& name = expect_name("a predicate name");
            std::vector<Sort> args;
            if (is("("))
                args = sort_list();
            declare(name, [&] { sig_->declare_predicate(name.text, args); });
            out.declarations.push_back({Decl::Kind::Pred, name.text, args, {}, name.line, name.column});
        }
        expect(";");
    }

    // formulas

    SurfaceFormula implies()
    {
        auto lhs = disjunction();
        if (accept("->"))
            return SurfaceFormula::binary(SurfaceFormula::Kind::Implies, lhs, implies());
        return lhs;
    }

    SurfaceFormula disjunction()
    {
        auto f = conjunction();
        while (accept("|"))
            f = SurfaceFormula::binary(SurfaceFormula::Kind::Or, f, conjunction());
        return f;
    }

    SurfaceFormula conjunction()
    {
        auto f = temporal_binary();
        while (accept("&"))
            f = SurfaceFormula::binary(SurfaceFormula::Kind::And, f, temporal_binary());
        return f;
    }

    SurfaceFormula temporal_binary()
    {
        auto lhs = unary();
        if (peek().kind == Tok::Ident && (peek().text == "U" || peek().text == "R")) {
            auto kind = next().text == "U" ? SurfaceFormula::Kind::U : SurfaceFormula::Kind::R;
            return SurfaceFormula::binary(kind, lhs, temporal_binary());
        }
        return lhs;
    }

    static bool contains_temporal(const SurfaceFormula& f)
    {
        if (f.is_temporal_operator())
            return true;
        for (const auto& c : f.children())
            if (contains_temporal(c))
                return true;
        return false;
    }

    SurfaceFormula unary()
    {
        using K = SurfaceFormula::Kind;
        const Token& t = peek();
        if (is("!")) {
            next();
            return SurfaceFormula::negation(unary());
        }
        if (t.kind == Tok::Ident) {
            if (t.text == "X" || t.text == "wX" || t.text == "F" || t.text == "G") {
                K kind = t.text == "X" ? K::X : t.text == "wX" ? K::WX : t.text == "F" ? K::F : K::G;
                next();
                return SurfaceFormula::unary(kind, unary());
            }
            if (t.text == "exists" || t.text == "forall") {
                Token quant = next();
                const Token& var = expect_name("a quantified variable");
                if (sig_->contains(var.text))
                    error(var, "quantified variable " + var.text + " clashes with a declared symbol");
                expect(":");
                Sort s = sort();
                expect(".");
                bound_.emplace_back(var.text, s);
                auto body = unary();
                bound_.pop_back();
                if (contains_temporal(body))
                    error(quant, "temporal operator under quantifier");
                return SurfaceFormula::quantifier(quant.text == "exists" ? K::Exists : K::Forall, var.text, s, body);
            }
        }
        return primary();
    }

    SurfaceFormula primary()
    {
        if (accept("true"))
            return SurfaceFormula::top();
        if (accept("false"))
            return SurfaceFormula::bottom();

        if (is("(")) {
            if (term_group())
                return atom();
            next();
            auto f = implies();
            expect(")");
            return f;
        }
        return atom();
    }

    // True when the parenthesised group at the cursor holds only term syntax,
    // so the group opens the left-hand side of an atom.
    bool term_group() const
    {
        static const std::set<std::string, std::less<>> formula_tokens = {
            "=", "!=", "<", "<=", ">", ">=", "&", "|", "!", "->", "X", "wX", "F", "G", "U", "R",
            "true", "false", "exists", "forall",
        };
        int depth = 0;
        for (std::size_t i = pos_; i < tokens_.size(); ++i) {
            const Token& t = tokens_[i];
            if (t.kind == Tok::End)
                return false;
            if (t.kind == Tok::Number)
                continue;
            if (t.text == "(")
                ++depth;
            else if (t.text == ")" && --depth == 0)
                return true;
            else if (formula_tokens.contains(t.text))
                return false;
            else if (t.kind == Tok::Ident && sig_->predicate(t.text))
                return false;
        }
        return false;
    }

    SurfaceFormula atom()
    {
        const Token& t = peek();
        if (t.kind == Tok::Ident && sig_->predicate(t.text)) {
            std::string name = next().text;
            std::vector<Term> args;
            if (accept("(")) {
                if (!is(")")) {
                    do
                        args.push_back(term());
                    while (accept(","));
                }
                expect(")");
            }
            return SurfaceFormula::atom(Atom::pred(name, std::move(args)));
        }

        Term lhs = term();
        const Token& op = peek();
        Relation rel;
        if (op.kind == Tok::Punct && op.text == "=")
            rel = Relation::Eq;
        else if (op.kind == Tok::Punct && op.text == "!=")
            rel = Relation::Ne;
        else if (op.kind == Tok::Punct && op.text == "<")
            rel = Relation::Lt;
        else if (op.kind == Tok::Punct && op.text == "<=")
            rel = Relation::Le;
        else if (op.kind == Tok::Punct && op.text == ">")
            rel = Relation::Gt;
        else if (op.kind == Tok::Punct && op.text == ">=")
            rel = Relation::Ge;
        else
            error(op, "expected a relation after term, found '" + describe(op) + "'");
        next();
        Term rhs = term();
        return SurfaceFormula::atom(Atom::rel(rel, lhs, rhs));
    }

    // terms

    Term term()
    {
        Term t = product();
        while (true) {
            if (accept("+"))
                t = Term::arith(ArithOp::Add, {t, product()});
            else if (accept("-"))
                t = Term::arith(ArithOp::Sub, {t, product()});
            else
                return t;
        }
    }

    Term product()
    {
        Term t = signed_term();
        while (true) {
            if (accept("*"))
                t = Term::arith(ArithOp::Mul, {t, signed_term()});
            else if (accept("/"))
                t = Term::arith(ArithOp::Div, {t, signed_term()});
            else
                return t;
        }
    }

    Term signed_term()
    {
        if (accept("-")) {
            if (peek().kind == Tok::Number)
                return number(true);
            return Term::arith(ArithOp::Neg, {signed_term()});
        }
        return primary_term();
    }

    Term number(bool negative)
    {
        const Token& t = next();
        auto value = parse_rational(t.text);
        if (!value)
            error(t, "malformed number " + t.text);
        if (negative)
            *value = -*value;
        return t.text.find('.') != std::string::npos ? Term::rat_lit(*value) : Term::int_lit(*value);
    }

    bool mentions_bound(const Term& t) const
    {
        if (t.kind() == Term::Kind::BoundVar)
            return true;
        for (const auto& a : t.args())
            if (mentions_bound(a))
                return true;
        return false;
    }

    Term primary_term()
    {
        const Token& t = peek();
        if (t.kind == Tok::Number)
            return number(false);
        if (accept("(")) {
            Term inner = term();
            expect(")");
            return inner;
        }
        if (t.kind != Tok::Ident)
            error(t, "expected a term, found '" + describe(t) + "'");

        if (t.text == "next" || t.text == "wnext") {
            Token kw = next();
            expect("(");
            Term operand = term();
            expect(")");
            if (mentions_bound(operand))
                error(kw, kw.text + " applied to a bound variable");
            return kw.text == "next" ? Term::next(operand) : Term::wnext(operand);
        }
        if (kKeywords.contains(t.text))
            error(t, "expected a term, found '" + t.text + "'");

        Token name = next();
        if (is("(")) {
            if (!sig_->function(name.text))
                error(name, "undeclared function " + name.text);
            next();
            std::vector<Term> args;
            if (!is(")")) {
                do
                    args.push_back(term());
                while (accept(","));
            }
            expect(")");
            return Term::apply(name.text, std::move(args));
        }
        for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
            if (it->first == name.text)
                return Term::bound_var(name.text);
        if (sig_->var_sort(name.text))
            return Term::state_var(name.text);
        if (sig_->constant_sort(name.text))
            return Term::constant(name.text);
        error(name, "undeclared variable " + name.text);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Signature* sig_;
    std::vector<std::pair<std::string, Sort>> bound_;
};

} // namespace

const Section* SourceFile::section(std::string_view name) const
{
    for (const auto& s : sections)
        if (s.name == name)
            return &s;
    return nullptr;
}

SourceFile parse_source(std::string_view text)
{
    Signature sig;
    Parser parser(lex(text), &sig);
    return parser.file();
}

TemporalFormula elaborate_section(const Section& section, const Signature& sig)
{
    try {
        return elaborate(to_nnf(section.formula), sig);
    } catch (const SortError& e) {
        throw ParseError(section.line, section.column, e.what());
    } catch (const ScopeError& e) {
        throw ParseError(section.line, section.column, e.what());
    }
}

Problem parse(std::string_view text)
{
    SourceFile file = parse_source(text);
    const Section* formula = file.section("formula");
    if (!formula) {
        int line = 1;
        if (!file.sections.empty())
            throw ParseError(file.sections.front().line, file.sections.front().column,
                             "unexpected section " + file.sections.front().name + " in a formula file");
        throw ParseError(line, 1, "missing 'formula:' section");
    }
    if (file.sections.size() > 1) {
        const auto& extra = file.sections[1].name == "formula" ? file.sections[0] : file.sections[1];
        throw ParseError(extra.line, extra.column, "unexpected section " + extra.name + " in a formula file");
    }
    return Problem{file.signature, elaborate_section(*formula, file.signature), file.logic};
}

TemporalFormula parse_formula(std::string_view text, const Signature& sig)
{
    Signature copy = sig;
    Parser parser(lex(text), &copy);
    Section section{"formula", parser.formula_only(), 1, 1};
    return elaborate_section(section, sig);
}

} // namespace ltlfmt
