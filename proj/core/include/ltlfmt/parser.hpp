#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltlfmt/errors.hpp"
#include "ltlfmt/formula.hpp"
#include "ltlfmt/surface.hpp"

namespace ltlfmt {

/// Lexical, syntactic, sort or scoping error with a source position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column),
          message_(message)
    {
    }

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

struct Decl {
    enum class Kind { Var, Const, Fun, Pred, Sort };
    Kind kind;
    std::string name;
    std::vector<Sort> args; // Fun and Pred
    std::optional<Sort> sort; // Var, Const, and Fun result
    int line = 0;
    int column = 0;
};

/// A named `<section>: <formula>;` block.
struct Section {
    std::string name;
    SurfaceFormula formula;
    int line = 0;
    int column = 0;
};

/// Raw contents of a `.ltlmt` file.
///
/// Syntax summary (`#` starts a comment):
///
///     sort S;   var x, y : Int;   const c : Real;
///     fun f(Int, Int) : Int;   pred p(S);   logic: QF_LIA;
///     formula: x = 0 & G(wnext(x) = x + 1) & F(x = 42);
///
/// Precedence from tightest: quantifiers and unary operators (!, X, wX, F, G),
/// then U and R (right-associative), then &, then |, then ->.
struct SourceFile {
    std::vector<Decl> declarations;
    std::vector<Section> sections;
    std::optional<std::string> logic;
    Signature signature;

    const Section* section(std::string_view name) const;
};

SourceFile parse_source(std::string_view text);

struct Problem {
    Signature signature;
    TemporalFormula formula;
    std::optional<std::string> logic;
};

/// Parses a file with exactly one `formula:` section. The result is
/// sort-checked and in negation normal form.
Problem parse(std::string_view text);

/// Parses a standalone formula against an existing signature.
TemporalFormula parse_formula(std::string_view text, const Signature& sig);

/// Converts a parsed section to NNF and sort-checks it against the file's
/// signature, reporting errors at the section's position.
TemporalFormula elaborate_section(const Section& section, const Signature& sig);

} // namespace ltlfmt
