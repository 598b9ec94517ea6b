#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltlfmt/parser.hpp"

namespace ltlfmt::bench {

/// The scalable benchmark schemata.
///
///   lia-counter        x = 0 & G(wnext(x) = x + 1) & F(x = N)
///   lia-sum-unsat      x0 > 0 & AND_{i<N} X^i(next(x_{i+1}) > x_i)
///                      & G(AND_{i<=N} wnext(x_i) = x_i) & G(x0 + ... + x_{N-1} = N(N-1)/2 - 1)
///   lra-decade         c = 1 & G(wnext(c) = 10*c) & X^N(x = c & G(wnext(x) = x/10) & F(x = 1))
///   lra-geometric      c = 1 & G(wnext(c) = 10*c) & e = 1 & x = 0
///                      & X^N(g = c & G(wnext(e) = e/2 & wnext(x) = x + e & 0 <= x & x < 2) & F(x > 2 - 1/g))
///   euf-lia-recursion  n = 0 & c >= 0 & G(wnext(c) = c & wnext(n) = n + 1)
///                      & G((n > 1 -> f(n) = 2*f(n - 1) + c) & (n = 1 -> f(n) = c)) & X^N(wX false)
enum class Family { LiaCounter, LiaSumUnsat, LraDecade, LraGeometric, EufLiaRecursion };

const std::vector<Family>& all_families();
std::string family_id(Family f);
std::optional<Family> parse_family(std::string_view id);

/// `.ltlmt` source of the instance. Throws Error for N < 1 (N < 2 for
/// lia-sum-unsat).
std::string generate_source(Family f, unsigned n);

/// The parsed instance.
Problem gen_benchmark(Family f, unsigned n);

} // namespace ltlfmt::bench
