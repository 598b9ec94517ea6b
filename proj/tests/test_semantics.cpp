#include <gtest/gtest.h>

#include "ltlfmt/enumerate.hpp"
#include "ltlfmt/nnf.hpp"
#include "ltlfmt/parser.hpp"
#include "ltlfmt/semantics.hpp"
#include "ltlfmt/trace_json.hpp"
#include "support/random_formula.hpp"

using namespace ltlfmt;
using TF = TemporalFormula;

namespace {

Value num(long v) { return Value::number(Rational(v)); }

Trace xs(std::initializer_list<long> values)
{
    Trace t;
    for (long v : values)
        t.states.push_back({{"x", num(v)}});
    return t;
}

Signature only_x()
{
    Signature sig;
    sig.declare_var("x", Sort::integer());
    return sig;
}

TF formula(const char* text) { return parse_formula(text, only_x()); }

Term x() { return Term::state_var("x"); }
Term lit(long v) { return Term::int_lit(Rational(v)); }

Term weaken(const Term& t)
{
    std::vector<Term> args;
    for (const auto& a : t.args())
        args.push_back(weaken(a));
    switch (t.kind()) {
    case Term::Kind::Next:
    case Term::Kind::WNext:
        return Term::wnext(args.front());
    case Term::Kind::Apply:
        return Term::apply(t.name(), args);
    case Term::Kind::Arith:
        return Term::arith(t.op(), args);
    default:
        return t;
    }
}

} // namespace

TEST(EvalTerm, NextReadsTheSuccessor)
{
    EXPECT_EQ(eval_term(Term::next(x()), xs({0, 1}), 0), num(1));
    EXPECT_EQ(eval_term(Term::wnext(x()), xs({0, 1}), 0), num(1));
}

TEST(EvalTerm, NextIsUndefinedAtTheEnd)
{
    EXPECT_FALSE(eval_term(Term::next(x()), xs({0}), 0).has_value());
    EXPECT_FALSE(eval_term(Term::arith(ArithOp::Add, {x(), Term::wnext(x())}), xs({0, 1}), 1).has_value());
}

TEST(EvalTerm, ConstantsAndFunctions)
{
    auto t = xs({3});
    t.interp.set_constant("c", num(7));
    t.interp.set_function("f", {num(3)}, num(9));
    EXPECT_EQ(eval_term(Term::constant("c"), t, 0), num(7));
    EXPECT_EQ(eval_term(Term::apply("f", {x()}), t, 0), num(9));
    EXPECT_THROW(eval_term(Term::apply("f", {lit(4)}), t, 0), IncompleteInterpretation);
    EXPECT_THROW(eval_term(Term::constant("d"), t, 0), IncompleteInterpretation);
}

TEST(EvalTerm, ExactArithmetic)
{
    Trace t;
    t.states.push_back({{"r", Value::number(Rational(1, 3))}});
    auto r = Term::state_var("r");
    auto sum = Term::arith(ArithOp::Add, {r, Term::arith(ArithOp::Div, {r, Term::rat_lit(Rational(10))})});
    EXPECT_EQ(eval_term(sum, t, 0), Value::number(Rational(11, 30)));
}

TEST(SatFo, WeakAtomAtTheEndIsTrue)
{
    auto a = Atom::rel(Relation::Eq, Term::wnext(x()), Term::arith(ArithOp::Add, {x(), lit(1)}));
    EXPECT_TRUE(sat_fo(FoFormula::atom(a), xs({5}), 0));
}

TEST(SatFo, StrongAtomAtTheEndIsFalse)
{
    auto a = Atom::rel(Relation::Eq, Term::next(x()), Term::arith(ArithOp::Add, {x(), lit(1)}));
    EXPECT_FALSE(sat_fo(FoFormula::atom(a), xs({5}), 0));
    EXPECT_TRUE(sat_fo(FoFormula::neg_atom(a), xs({5}), 0));
}

TEST(SatFo, QuantifierOverFiniteDomain)
{
    auto t = xs({4});
    t.interp.set_domain(Sort::integer(), int_range(0, 4));
    auto y = Term::bound_var("y");
    auto body = FoFormula::atom(Atom::rel(Relation::Eq, x(), Term::arith(ArithOp::Add, {y, y})));
    EXPECT_TRUE(sat_fo(FoFormula::exists("y", Sort::integer(), body), t, 0));
    EXPECT_FALSE(sat_fo(FoFormula::forall("y", Sort::integer(), body), t, 0));
}

TEST(SatFo, QuantifierOverInfiniteDomainNeedsDelegation)
{
    auto body = FoFormula::atom(Atom::rel(Relation::Eq, x(), Term::bound_var("y")));
    try {
        sat_fo(FoFormula::exists("y", Sort::integer(), body), xs({4}), 0);
        FAIL() << "expected NeedsDelegation";
    } catch (const NeedsDelegation& e) {
        EXPECT_NE(std::string(e.what()).find("delegate to SMT verification"), std::string::npos);
    }
}

TEST(SatTemporal, Tomorrow)
{
    auto f = formula("X(x = 1)");
    EXPECT_TRUE(sat_temporal(f, xs({0, 1}), 0));
    EXPECT_FALSE(sat_temporal(f, xs({0, 1}), 1));
}

TEST(SatTemporal, WeakTomorrowAtTheEnd) { EXPECT_TRUE(sat_temporal(formula("wX false"), xs({0}), 0)); }

TEST(SatTemporal, Until)
{
    EXPECT_TRUE(sat_temporal(formula("x < 2 U x = 2"), xs({0, 1, 2}), 0));
    EXPECT_FALSE(sat_temporal(formula("x < 1 U x = 2"), xs({0, 1, 2}), 0));
    EXPECT_FALSE(sat_temporal(formula("x < 2 U x = 3"), xs({0, 1, 2}), 0));
}

TEST(SatTemporal, Release)
{
    EXPECT_TRUE(sat_temporal(formula("x = 9 R x < 5"), xs({0, 1, 2}), 0));
    EXPECT_TRUE(sat_temporal(formula("x = 1 R x < 2"), xs({0, 1, 7}), 0));
    EXPECT_FALSE(sat_temporal(formula("x = 2 R x < 2"), xs({0, 1, 7}), 0));
}

TEST(SatTemporal, AgreesWithSurfaceOracle)
{
    fixtures::RandomFormula gen(31);
    gen.allow_quantifiers = false;
    auto traces = fixtures::all_traces(3);
    for (int n = 0; n < 200; ++n) {
        auto f = gen.surface(3);
        auto nnf = to_nnf(f);
        for (const auto& t : traces) {
            fixtures::SurfaceOracle oracle(t, {});
            for (std::size_t i = 0; i < t.length(); ++i)
                ASSERT_EQ(sat_temporal(nnf, t, i), oracle.eval(f, i)) << to_string(f);
        }
    }
}

TEST(SatTemporal, ShortcutCoherence)
{
    fixtures::RandomFormula gen(32);
    gen.allow_quantifiers = false;
    auto traces = fixtures::all_traces(3);
    for (int n = 0; n < 100; ++n) {
        auto body = gen.surface(2);
        auto f_short = SurfaceFormula::unary(SurfaceFormula::Kind::F, body);
        auto g_short = SurfaceFormula::unary(SurfaceFormula::Kind::G, body);
        auto f_long = TF::until(TF::top(), to_nnf(body));
        auto g_long = TF::release(TF::bottom(), to_nnf(body));
        for (const auto& t : traces) {
            fixtures::SurfaceOracle oracle(t, {});
            ASSERT_EQ(oracle.eval(f_short, 0), sat_temporal(f_long, t));
            ASSERT_EQ(oracle.eval(g_short, 0), sat_temporal(g_long, t));
        }
    }
}

TEST(SatTemporal, WeakStrongDualityAtTheEnd)
{
    fixtures::RandomFormula gen(33);
    auto traces = fixtures::all_traces(2);
    int checked = 0;
    for (int n = 0; n < 2000; ++n) {
        auto a = gen.atom();
        bool strong = false;
        for (const auto& t : a.args)
            strong = strong || t.contains_next();
        if (!strong)
            continue;
        Atom twin = a;
        for (auto& t : twin.args)
            t = weaken(t);
        for (const auto& t : traces) {
            ASSERT_FALSE(sat_fo(FoFormula::atom(a), t, t.last()));
            ASSERT_TRUE(sat_fo(FoFormula::atom(twin), t, t.last()));
        }
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(SatTemporal, UnusedSymbolsDoNotMatter)
{
    fixtures::RandomFormula gen(34);
    gen.allow_quantifiers = false;
    gen.allow_next = false;
    auto traces = fixtures::all_traces(2);
    for (int n = 0; n < 200; ++n) {
        auto f = gen.temporal(3);
        for (auto t : traces) {
            bool before = sat_temporal(f, t);
            t.interp.set_constant("unused", num(n));
            t.interp.set_function("g", {num(0)}, num(n));
            t.interp.set_predicate("p", {num(1)}, n % 2 == 0);
            ASSERT_EQ(sat_temporal(f, t), before);
        }
    }
}

TEST(EnumerateSat, Contradiction)
{
    FiniteDomains d{{Sort::integer(), int_range(0, 1)}};
    EXPECT_FALSE(enumerate_sat(formula("G(x = 0) & F(x = 1)"), only_x(), d, 3));
}

TEST(EnumerateSat, ShortestTrace)
{
    FiniteDomains d{{Sort::integer(), int_range(0, 1)}};
    auto t = enumerate_sat(formula("x = 0 & X(x = 1)"), only_x(), d, 3);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->states, xs({0, 1}).states);
}

TEST(EnumerateSat, UntilSatisfiedImmediately)
{
    FiniteDomains d{{Sort::integer(), int_range(0, 1)}};
    auto t = enumerate_sat(formula("x < 1 U x = 1"), only_x(), d, 2);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->states, xs({1}).states);
}

TEST(EnumerateSat, MatchesExhaustiveSearch)
{
    fixtures::RandomFormula gen(35);
    auto sig = fixtures::RandomFormula::signature();
    FiniteDomains d{{Sort::integer(), int_range(0, 1)}};
    auto traces = fixtures::all_traces(3);
    std::vector<Value> domain = int_range(0, 1);
    for (auto& t : traces)
        t.interp.set_domain(Sort::integer(), domain);
    for (int n = 0; n < 100; ++n) {
        auto f = gen.temporal(3);
        std::optional<std::size_t> shortest;
        for (const auto& t : traces) {
            if (sat_temporal(f, t)) {
                shortest = t.length();
                break;
            }
        }
        auto found = enumerate_sat(f, sig, d, 3);
        ASSERT_EQ(found.has_value(), shortest.has_value()) << to_string(f);
        if (found) {
            EXPECT_EQ(found->length(), *shortest);
            EXPECT_TRUE(sat_temporal(f, *found));
        }
    }
}

TEST(EnumerateSat, CapIsReported)
{
    FiniteDomains d{{Sort::integer(), int_range(0, 9)}};
    try {
        enumerate_sat(formula("G(x = 0) & F(x = 1)"), only_x(), d, 8, 1000);
        FAIL() << "expected the cap to be exceeded";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
    }
}

TEST(TraceJson, Format)
{
    Trace t;
    t.states.push_back({{"x", num(0)}, {"r", Value::number(Rational(-1, 10))}});
    EXPECT_EQ(to_json(t), R"({"length":1,"states":[{"r":"-1/10","x":"0"}]})");
}

TEST(TraceJson, RoundTripIsExact)
{
    Signature sig;
    sig.declare_sort("Job");
    sig.declare_var("x", Sort::integer());
    sig.declare_var("r", Sort::real());
    sig.declare_var("j", Sort::uninterpreted("Job"));
    Trace t;
    for (long i = 0; i < 4; ++i)
        t.states.push_back({{"x", num(-i)},
                            {"r", Value::number(Rational(1, 3) * Rational(i + 1))},
                            {"j", Value::element("Job", static_cast<std::size_t>(i % 2))}});
    t.model_incomplete = true;
    auto back = trace_from_json(to_json(t, 2), sig);
    EXPECT_EQ(back.states, t.states);
    EXPECT_TRUE(back.model_incomplete);
    EXPECT_THROW(trace_from_json(R"({"length":1,"states":[{"q":"1"}]})", sig), Error);
    EXPECT_THROW(trace_from_json(R"({"length":0,"states":[]})", sig), Error);
}
