#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ltlfmt/numeric.hpp"
#include "ltlfmt/signature.hpp"

namespace ltlfmt {

/// Element of an uninterpreted sort, rendered "<sort>#<id>".
struct Element {
    std::string sort;
    std::size_t id = 0;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

/// A domain value: a number (Int values are integral rationals), a truth
/// value (predicate results), or an element of an uninterpreted sort.
class Value {
public:
    Value() : v_(Rational(0)) {}
    static Value number(Rational r) { return Value(std::move(r)); }
    static Value boolean(bool b) { return Value(b); }
    static Value element(std::string sort, std::size_t id) { return Value(Element{std::move(sort), id}); }

    bool is_number() const { return std::holds_alternative<Rational>(v_); }
    bool is_boolean() const { return std::holds_alternative<bool>(v_); }
    bool is_element() const { return std::holds_alternative<Element>(v_); }

    const Rational& number() const { return std::get<Rational>(v_); }
    bool boolean() const { return std::get<bool>(v_); }
    const Element& element() const { return std::get<Element>(v_); }

    friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }
    friend bool operator<(const Value& a, const Value& b) { return a.v_ < b.v_; }

private:
    template <typename T>
    explicit Value(T v) : v_(std::move(v)) {}

    std::variant<Rational, bool, Element> v_;
};

/// "5", "-1/10", "true", "Job#0".
std::string to_string(const Value& v);

/// Parses the rendering of to_string() at the given sort. Int values must be
/// integral; Real values may also be written as decimals.
std::optional<Value> parse_value(std::string_view text, const Sort& sort);

/// 0 for numeric sorts, element 0 for uninterpreted ones.
Value default_value(const Sort& sort);

bool has_sort(const Value& v, const Sort& sort);

} // namespace ltlfmt
