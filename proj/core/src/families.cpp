#include "ltlfmt/bench/families.hpp"

#include <sstream>

#include "ltlfmt/errors.hpp"

namespace ltlfmt::bench {

namespace {

std::string nest_x(unsigned n, const std::string& body)
{
    std::string out;
    for (unsigned k = 0; k < n; ++k)
        out += "X(";
    out += body;
    out += std::string(n, ')');
    return out;
}

std::string var_list(const std::string& prefix, unsigned count)
{
    std::string out;
    for (unsigned i = 0; i < count; ++i)
        out += (i ? ", " : "") + prefix + std::to_string(i);
    return out;
}

std::string lia_sum_unsat(unsigned n)
{
    std::ostringstream s;
    s << "var " << var_list("x", n + 1) << " : Int;\n";
    s << "formula:\n  x0 > 0";
    for (unsigned i = 0; i < n; ++i) {
        std::string step = "next(x" + std::to_string(i + 1) + ") > x" + std::to_string(i);
        s << "\n  & " << (i == 0 ? step : nest_x(i, step));
    }
    s << "\n  & G(";
    for (unsigned i = 0; i <= n; ++i)
        s << (i ? " & " : "") << "wnext(x" << i << ") = x" << i;
    s << ")\n  & G(";
    for (unsigned i = 0; i < n; ++i)
        s << (i ? " + " : "") << "x" << i;
    mpz_class target = mpz_class(n) * (n - 1) / 2 - 1;
    s << " = " << target.get_str() << ");\n";
    return s.str();
}

} // namespace

const std::vector<Family>& all_families()
{
    static const std::vector<Family> families{Family::LiaCounter, Family::LiaSumUnsat, Family::LraDecade,
                                              Family::LraGeometric, Family::EufLiaRecursion};
    return families;
}

std::string family_id(Family f)
{
    switch (f) {
    case Family::LiaCounter:
        return "lia-counter";
    case Family::LiaSumUnsat:
        return "lia-sum-unsat";
    case Family::LraDecade:
        return "lra-decade";
    case Family::LraGeometric:
        return "lra-geometric";
    case Family::EufLiaRecursion:
        return "euf-lia-recursion";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view id)
{
    for (auto f : all_families())
        if (family_id(f) == id)
            return f;
    return std::nullopt;
}

std::string generate_source(Family f, unsigned n)
{
    unsigned min = f == Family::LiaSumUnsat ? 2 : 1;
    if (n < min)
        throw Error(family_id(f) + " needs N >= " + std::to_string(min));
    std::string N = std::to_string(n);
    switch (f) {
    case Family::LiaCounter:
        return "var x : Int;\nformula: x = 0 & G(wnext(x) = x + 1) & F(x = " + N + ");\n";
    case Family::LiaSumUnsat:
        return lia_sum_unsat(n);
    case Family::LraDecade:
        return "var c, x : Real;\nformula:\n  c = 1 & G(wnext(c) = 10*c)\n  & "
            + nest_x(n, "x = c & G(wnext(x) = x/10) & F(x = 1)") + ";\n";
    case Family::LraGeometric:
        return "var c, e, x, g : Real;\nformula:\n  c = 1 & G(wnext(c) = 10*c) & e = 1 & x = 0\n  & "
            + nest_x(n, "g = c & G(wnext(e) = e/2 & wnext(x) = x + e & 0 <= x & x < 2) & F(x > 2 - 1/g)") + ";\n";
    case Family::EufLiaRecursion:
        return "var n, c : Int;\nfun f(Int) : Int;\nformula:\n  n = 0 & c >= 0 & G(wnext(c) = c & wnext(n) = n + 1)\n"
               "  & G((n > 1 -> f(n) = 2*f(n - 1) + c) & (n = 1 -> f(n) = c))\n  & "
            + nest_x(n, "wX false") + ";\n";
    }
    throw InternalError("unknown family");
}

Problem gen_benchmark(Family f, unsigned n) { return parse(generate_source(f, n)); }

} // namespace ltlfmt::bench
