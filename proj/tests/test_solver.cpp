#include <gtest/gtest.h>

#include "ltlfmt/encoder/encoder.hpp"
#include "ltlfmt/enumerate.hpp"
#include "ltlfmt/flatten.hpp"
#include "ltlfmt/parser.hpp"
#include "ltlfmt/semantics.hpp"
#include "ltlfmt/solver.hpp"
#include "ltlfmt/witness.hpp"
#include "support/backend.hpp"
#include "support/random_formula.hpp"

using namespace ltlfmt;
using TF = TemporalFormula;

namespace {

Signature only_x()
{
    Signature sig;
    sig.declare_var("x", Sort::integer());
    return sig;
}

SolveOptions options(std::size_t max_k, Engine engine = Engine::Encoding)
{
    SolveOptions o;
    o.max_k = max_k;
    o.backend = fixtures::backend();
    o.engine = engine;
    o.verify_witness = true;
    return o;
}

SolveOutcome solve_text(const char* text, std::size_t max_k, Engine engine = Engine::Encoding)
{
    auto p = parse(text);
    return solve(p.formula, p.signature, options(max_k, engine));
}

Trace xs(std::initializer_list<long> values)
{
    Trace t;
    for (long v : values)
        t.states.push_back({{"x", Value::number(Rational(v))}});
    return t;
}

} // namespace

TEST(Solve, EvenThreeIsUnsatAtZero)
{
    REQUIRE_SOLVER();
    auto r = solve_text("var x : Int; formula: x = 3 & G(exists y:Int . x = y + y);", 10);
    EXPECT_EQ(r.status, SolveStatus::Unsat);
    EXPECT_EQ(r.k, 0u);
    EXPECT_EQ(r.checks, 1u);
}

TEST(Solve, CounterReachesFive)
{
    REQUIRE_SOLVER();
    auto r = solve_text("var x : Int; formula: x = 0 & G(wnext(x) = x + 1) & F(x = 5);", 20);
    ASSERT_EQ(r.status, SolveStatus::Sat);
    EXPECT_EQ(r.k, 5u);
    ASSERT_TRUE(r.trace);
    ASSERT_EQ(r.trace->length(), 6u);
    for (long i = 0; i <= 5; ++i)
        EXPECT_EQ(r.trace->states[i].at("x"), Value::number(Rational(i)));
    ASSERT_TRUE(r.verification);
    EXPECT_EQ(r.verification->verdict, Verdict::Valid);
}

TEST(Solve, UnfulfillableEventualityExhaustsTheBound)
{
    REQUIRE_SOLVER();
    auto r = solve_text("var x : Int; formula: G(x > 5) & F(x < 0);", 10);
    EXPECT_EQ(r.status, SolveStatus::Unknown);
    EXPECT_EQ(r.reason, "bound-exhausted");
}

TEST(Solve, TimeBudget)
{
    REQUIRE_SOLVER();
    auto p = parse("var x : Int; formula: G(x > 5) & F(x < 0);");
    auto o = options(0);
    o.time_budget = std::chrono::milliseconds(300);
    auto r = solve(p.formula, p.signature, o);
    EXPECT_EQ(r.status, SolveStatus::Unknown);
    EXPECT_EQ(r.reason, "timeout");
}

TEST(Solve, SatTraceLengthIsKPlusOne)
{
    REQUIRE_SOLVER();
    for (const char* text : {"var x : Int; formula: X(X(x = 2));", "var x : Int; formula: F(x = 1) & wX false;",
                             "var x : Int; formula: x = 0 U (x = 1 & X(x = 2));"}) {
        auto r = solve_text(text, 10);
        ASSERT_EQ(r.status, SolveStatus::Sat) << text;
        EXPECT_EQ(r.trace->length(), r.k + 1) << text;
        EXPECT_EQ(r.verification->verdict, Verdict::Valid) << text;
    }
}

TEST(Solve, Deterministic)
{
    REQUIRE_SOLVER();
    const char* text = "var x, y : Int; formula: x = 0 & G(wnext(x) >= x + y & y >= 1) & F(x > 7);";
    auto a = solve_text(text, 20);
    auto b = solve_text(text, 20);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.k, b.k);
    ASSERT_TRUE(a.trace && b.trace);
    EXPECT_EQ(a.trace->states, b.trace->states);
}

TEST(Solve, ProjectsAwayFlatteningAliases)
{
    REQUIRE_SOLVER();
    auto r = solve_text("var x : Int; formula: x = 1 & next(x) = 1 & G(wnext(wnext(x)) = wnext(x) + x) & F(x = 5);",
                        20);
    ASSERT_EQ(r.status, SolveStatus::Sat);
    std::vector<long> fib{1, 1, 2, 3, 5};
    ASSERT_EQ(r.trace->length(), fib.size());
    for (std::size_t i = 0; i < fib.size(); ++i) {
        EXPECT_EQ(r.trace->states[i].size(), 1u);
        EXPECT_EQ(r.trace->states[i].at("x"), Value::number(Rational(fib[i])));
    }
    EXPECT_EQ(r.verification->verdict, Verdict::Valid);
}

TEST(Solve, FibonacciFlatteningIsEquisatisfiable)
{
    REQUIRE_SOLVER();
    auto nested = solve_text("var x : Int; formula: x = 1 & next(x) = 1 & G(wnext(wnext(x)) = wnext(x) + x);", 6);
    auto by_hand = solve_text(
        "var x, y : Int; formula: x = 1 & next(x) = 1 & y = 1 & G(y = wnext(x) & wnext(y) = y + x);", 6);
    EXPECT_EQ(nested.status, by_hand.status);
    EXPECT_EQ(nested.status, SolveStatus::Sat);
}

TEST(Solve, NestedWeakNextIsEquisatisfiableWithItsFlattening)
{
    REQUIRE_SOLVER();
    const char* cases[] = {
        "G(wnext(wnext(x)) = x)",
        "G(wnext(wnext(x)) = x) & x = 0 & next(x) = 1 & F(x = 1 & wX false)",
        "G(wnext(wnext(x)) = x) & x = 0 & next(x) = 1 & X(X(x = 1))",
        "X(next(next(x)) = x + 1) & G(x = 0)",
        "x = 0 & F(next(next(x)) = 2) & G(wnext(x) = x + 1)",
        "x = 0 & F(next(next(x)) = 2 & wX(wX false)) & G(wnext(x) = x + 1)",
    };
    for (const char* text : cases) {
        auto sig = only_x();
        auto f = parse_formula(text, sig);
        auto flat_sig = sig;
        auto flat = flatten_next(f, flat_sig);
        auto a = solve(f, sig, options(6));
        auto b = solve(flat, flat_sig, options(6));
        EXPECT_EQ(a.status, b.status) << text;
        if (a.status == SolveStatus::Sat) {
            EXPECT_EQ(a.verification->verdict, Verdict::Valid) << text;
        }
    }
}

TEST(Solve, MonotoneUnraveling)
{
    REQUIRE_SOLVER();
    fixtures::RandomFormula gen(61);
    auto sig = fixtures::RandomFormula::signature();
    for (int n = 0; n < 30; ++n) {
        auto f = gen.temporal(3);
        Encoder enc(f);
        smt::Session s(fixtures::backend(), sig);
        s.assert_formula(enc.unravel_base());
        bool unsat = false;
        for (std::size_t k = 0; k < 5; ++k) {
            auto st = s.check().status;
            if (unsat) {
                ASSERT_EQ(st, smt::CheckStatus::Unsat) << to_string(f) << " at k=" << k;
            }
            unsat = st == smt::CheckStatus::Unsat;
            s.assert_formula(enc.unravel_delta(k));
        }
    }
}

TEST(Solve, AgreesWithEnumeration)
{
    REQUIRE_SOLVER();
    fixtures::RandomFormula gen(62);
    auto sig = fixtures::RandomFormula::signature();
    auto range = TF::always(parse_formula("0 <= x & x <= 1 & 0 <= y & y <= 1", sig));
    FiniteDomains d{{Sort::integer(), int_range(0, 1)}};
    for (int n = 0; n < 30; ++n) {
        auto f = TF::conj(gen.temporal(3), range);
        auto oracle = enumerate_sat(f, sig, d, 4);
        auto r = solve(f, sig, options(6));
        if (oracle) {
            ASSERT_EQ(r.status, SolveStatus::Sat) << to_string(f);
            EXPECT_LE(r.k + 1, oracle->length()) << to_string(f);
        }
        if (r.status == SolveStatus::Unsat) {
            EXPECT_FALSE(oracle) << to_string(f);
        }
        if (r.status == SolveStatus::Sat) {
            EXPECT_EQ(r.verification->verdict, Verdict::Valid) << to_string(f);
        }
    }
}

TEST(Solve, EnginesAgree)
{
    REQUIRE_SOLVER();
    for (const char* text : {"var x : Int; formula: x = 0 & X(x = 1);", "var x : Int; formula: G(x > 5) & F(x < 0);",
                             "var x : Int; formula: x = 3 & G(exists y:Int . x = y + y);",
                             "var x : Int; formula: (x = 0 U x = 2) & G(wnext(x) = x + 1);"}) {
        auto r = solve_text(text, 5, Engine::Both);
        EXPECT_FALSE(r.divergence) << text << ": " << r.divergence.value_or("");
    }
}

TEST(Witness, Examples)
{
    REQUIRE_SOLVER();
    auto sig = only_x();
    auto cfg = fixtures::backend();
    auto counter = parse_formula("x = 0 & G(wnext(x) = x + 1) & F(x = 5)", sig);
    EXPECT_EQ(verify_witness(xs({0, 1, 2, 3, 4, 5}), counter, sig, cfg).verdict, Verdict::Valid);
    EXPECT_EQ(verify_witness(xs({0, 1, 2, 4, 5}), counter, sig, cfg).verdict, Verdict::Invalid);
    EXPECT_EQ(verify_witness(xs({0}), parse_formula("X(x = 0)", sig), sig, cfg).verdict, Verdict::Invalid);
    EXPECT_EQ(verify_witness(xs({0}), parse_formula("wX(x = 7)", sig), sig, cfg).verdict, Verdict::Valid);
}

TEST(Witness, QuantifiersAreDelegated)
{
    REQUIRE_SOLVER();
    auto sig = only_x();
    auto cfg = fixtures::backend();
    auto even = parse_formula("G(exists y:Int . x = y + y)", sig);
    auto ok = verify_witness(xs({4, -2, 0}), even, sig, cfg);
    EXPECT_EQ(ok.verdict, Verdict::Valid);
    EXPECT_GT(ok.delegated, 0u);
    EXPECT_EQ(verify_witness(xs({4, 3}), even, sig, cfg).verdict, Verdict::Invalid);
}

TEST(Witness, UnderdeterminedInterpretationIsUnknown)
{
    REQUIRE_SOLVER();
    Signature sig = only_x();
    sig.declare_function("f", {Sort::integer()}, Sort::integer());
    auto phi = parse_formula("f(x) = 1", sig);
    EXPECT_EQ(verify_witness(xs({0}), phi, sig, fixtures::backend()).verdict, Verdict::Unknown);
    auto t = xs({0});
    t.interp.set_function("f", {Value::number(Rational(0))}, Value::number(Rational(1)));
    EXPECT_EQ(verify_witness(t, phi, sig, fixtures::backend()).verdict, Verdict::Valid);
}
