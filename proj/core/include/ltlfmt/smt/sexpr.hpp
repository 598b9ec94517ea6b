#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ltlfmt::smt {

/// S-expression as printed by SMT-LIB solvers. Quoted symbols `|a b|` and
/// string literals keep their delimiters in `text`.
struct SExpr {
    std::string text;
    std::vector<SExpr> items;
    bool is_list = false;

    bool is_atom() const { return !is_list; }
    bool is(std::string_view atom) const { return !is_list && text == atom; }
    /// The atom with `|...|` quoting removed.
    std::string symbol() const;
};

std::string to_string(const SExpr& e);

/// Splits off the first complete s-expression of `buffer`, skipping
/// whitespace and `;` comments (which are appended to `comments` when given).
/// Returns nullopt when the buffer holds only a prefix; `consumed` is then 0.
std::optional<SExpr> take_sexpr(std::string_view buffer, std::size_t& consumed, std::string* comments = nullptr);

/// Parses exactly one s-expression; throws Error otherwise.
SExpr parse_sexpr(std::string_view text);

} // namespace ltlfmt::smt
