#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ltlfmt {

/// Exact rational; integers are rationals with denominator 1.
using Rational = mpq_class;

/// "7", "-7" or "-1/10".
std::string to_string(const Rational& value);

/// Finite decimal rendering ("0.1", "-2.5", "3.0") when the denominator has
/// no prime factors besides 2 and 5.
std::optional<std::string> to_decimal(const Rational& value);

/// Accepts integers, fractions "p/q" and decimals "d.ddd", all optionally signed.
std::optional<Rational> parse_rational(std::string_view text);

std::size_t hash_rational(const Rational& value);

inline void hash_combine(std::size_t& seed, std::size_t value)
{
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

} // namespace ltlfmt
