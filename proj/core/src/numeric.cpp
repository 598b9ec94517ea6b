#include "ltlfmt/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace ltlfmt {

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::optional<std::string> to_decimal(const Rational& value)
{
    mpz_class den = value.get_den();
    unsigned twos = 0;
    unsigned fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1)
        return std::nullopt;

    unsigned digits = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = abs(value.get_num()) * scale / value.get_den();
    std::string text = scaled.get_str();
    if (digits == 0)
        text += ".0";
    else {
        if (text.size() <= digits)
            text.insert(0, digits - text.size() + 1, '0');
        text.insert(text.size() - digits, ".");
    }
    if (value < 0)
        text.insert(0, "-");
    return text;
}

std::optional<Rational> parse_rational(std::string_view text)
{
    if (text.empty())
        return std::nullopt;
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty())
        return std::nullopt;

    auto all_digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };

    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            return std::nullopt;
        mpz_class d(std::string(den), 10);
        if (d == 0)
            return std::nullopt;
        result = Rational(mpz_class(std::string(num), 10), d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac))
            return std::nullopt;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        result = Rational(mpz_class(std::string(whole) + std::string(frac), 10), scale);
    } else {
        if (!all_digits(text))
            return std::nullopt;
        result = Rational(mpz_class(std::string(text), 10));
    }
    result.canonicalize();
    if (negative)
        result = -result;
    return result;
}

std::size_t hash_rational(const Rational& value)
{
    return std::hash<std::string>{}(to_string(value));
}

} // namespace ltlfmt
