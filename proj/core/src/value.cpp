#include "ltlfmt/value.hpp"

#include <charconv>

namespace ltlfmt {

std::string to_string(const Value& v)
{
    if (v.is_number())
        return to_string(v.number());
    if (v.is_boolean())
        return v.boolean() ? "true" : "false";
    return v.element().sort + "#" + std::to_string(v.element().id);
}

std::optional<Value> parse_value(std::string_view text, const Sort& sort)
{
    if (sort.kind() == Sort::Kind::Uninterpreted) {
        auto hash = text.rfind('#');
        if (hash == std::string_view::npos || text.substr(0, hash) != sort.name())
            return std::nullopt;
        auto digits = text.substr(hash + 1);
        std::size_t id = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
        if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty())
            return std::nullopt;
        return Value::element(sort.name(), id);
    }
    auto r = parse_rational(text);
    if (!r)
        return std::nullopt;
    if (sort.kind() == Sort::Kind::Int && r->get_den() != 1)
        return std::nullopt;
    return Value::number(*r);
}

Value default_value(const Sort& sort)
{
    if (sort.kind() == Sort::Kind::Uninterpreted)
        return Value::element(sort.name(), 0);
    return Value::number(0);
}

bool has_sort(const Value& v, const Sort& sort)
{
    switch (sort.kind()) {
    case Sort::Kind::Int:
        return v.is_number() && v.number().get_den() == 1;
    case Sort::Kind::Real:
        return v.is_number();
    case Sort::Kind::Uninterpreted:
        return v.is_element() && v.element().sort == sort.name();
    }
    return false;
}

} // namespace ltlfmt
