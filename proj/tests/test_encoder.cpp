#include <gtest/gtest.h>

#include "ltlfmt/closure.hpp"
#include "ltlfmt/encoder/encoder.hpp"
#include "ltlfmt/parser.hpp"
#include "support/random_formula.hpp"

using namespace ltlfmt;
using TF = TemporalFormula;

namespace {

Signature sig_x()
{
    Signature sig;
    sig.declare_var("x", Sort::integer());
    sig.declare_var("y", Sort::integer());
    sig.declare_constant("c", Sort::integer());
    sig.declare_function("f", {Sort::integer(), Sort::integer()}, Sort::integer());
    return sig;
}

TF formula(const char* text) { return parse_formula(text, sig_x()); }

FoFormula fo(const char* text)
{
    auto f = formula(text);
    return f.fo();
}

std::string g(const ClosureTable& ct, const TF& f, std::size_t step)
{
    return "|_g@" + std::to_string(ct.id_of(f)) + "@" + std::to_string(step) + "|";
}

Term x() { return Term::state_var("x"); }

bool only_guarded_temporal(const TF& f, bool under_tomorrow)
{
    switch (f.kind()) {
    case TF::Kind::U:
    case TF::Kind::R:
        return under_tomorrow;
    case TF::Kind::X:
    case TF::Kind::WX:
        return true;
    default:
        for (const auto& c : f.children())
            if (!only_guarded_temporal(c, false))
                return false;
        return true;
    }
}

} // namespace

TEST(StepTerm, Examples)
{
    EXPECT_EQ(to_smtlib(step_term(Term::next(x()), 2)), "|x@3|");
    EXPECT_EQ(to_smtlib(step_term(Term::constant("c"), 5)), "c");
    EXPECT_EQ(to_smtlib(step_term(Term::apply("f", {x(), Term::wnext(x())}), 0)), "(f |x@0| |x@1|)");
    EXPECT_EQ(to_smtlib(step_term(Term::bound_var("z"), 4)), "z");
}

TEST(StepTerm, Literals)
{
    EXPECT_EQ(to_smtlib(step_term(Term::int_lit(Rational(-5)), 0)), "(- 5)");
    EXPECT_EQ(to_smtlib(step_term(Term::rat_lit(Rational(1, 10)), 0)), "(/ 1.0 10.0)");
    EXPECT_EQ(to_smtlib(step_term(Term::rat_lit(Rational(-3, 2)), 0)), "(- (/ 3.0 2.0))");
    EXPECT_EQ(to_smtlib(step_term(Term::rat_lit(Rational(2)), 0)), "2.0");
}

TEST(LabelL, StrongAtom)
{
    EXPECT_EQ(to_smtlib(label_L(fo("next(x) = x + 1"), 0)), "(and |_l@0| (= |x@1| (+ |x@0| 1)))");
}

TEST(LabelL, WeakAtom) { EXPECT_EQ(to_smtlib(label_L(fo("wnext(x) > x"), 2)), "(=> |_l@2| (> |x@3| |x@2|))"); }

TEST(LabelL, RigidAtomKeepsItsShape)
{
    EXPECT_EQ(to_smtlib(label_L(fo("exists z:Int . x = z + z"), 3)), "(exists ((z Int)) (= |x@3| (+ z z)))");
    EXPECT_EQ(to_smtlib(label_L(fo("x != 2"), 1)), "(distinct |x@1| 2)");
}

TEST(LabelL, NegatedStrongAtom)
{
    auto f = FoFormula::neg_atom(Atom::rel(Relation::Eq, Term::next(x()), x()));
    EXPECT_EQ(to_smtlib(label_L(f, 0)), "(not (and |_l@0| (= |x@1| |x@0|)))");
}

TEST(Snf, Until)
{
    auto f = formula("x = 0 U x = 1");
    EXPECT_EQ(snf(f), TF::disj(f.rhs(), TF::conj(f.lhs(), TF::tomorrow(f))));
}

TEST(Snf, TomorrowIsUntouched)
{
    auto f = formula("X(x = 0 U x = 1)");
    EXPECT_EQ(snf(f), f);
    auto w = formula("wX(x = 0)");
    EXPECT_EQ(snf(w), w);
}

TEST(Snf, AlwaysGroundsWithoutFalse)
{
    auto f = formula("G(x > 0)");
    EXPECT_EQ(snf(f), TF::conj(f.rhs(), TF::disj(TF::bottom(), TF::weak_tomorrow(f))));
    ClosureTable ct(f);
    EXPECT_EQ(to_smtlib(ground(snf(f), 1, ct)), "(and (> |x@1| 0) " + g(ct, TF::weak_tomorrow(f), 1) + ")");
}

TEST(Snf, UntilAndReleaseOnlyUnderTomorrow)
{
    fixtures::RandomFormula gen(41);
    for (int n = 0; n < 1000; ++n) {
        auto f = gen.temporal(5);
        EXPECT_TRUE(only_guarded_temporal(snf(f), false)) << to_string(f);
    }
}

TEST(Ground, UntilAtZero)
{
    auto f = formula("x = 0 U x = 1");
    ClosureTable ct(f);
    EXPECT_EQ(to_smtlib(ground(snf(f), 0, ct)),
              "(or (= |x@0| 1) (and (= |x@0| 0) " + g(ct, TF::tomorrow(f), 0) + "))");
}

TEST(Ground, FirstOrderHasNoGroundedSymbols)
{
    auto f = formula("next(x) = 1 & y < 3");
    ClosureTable ct(f);
    auto out = to_smtlib(ground(snf(f), 4, ct));
    EXPECT_EQ(out, "(and (and |_l@4| (= |x@5| 1)) (< |y@4| 3))");
    EXPECT_EQ(out.find("_g@"), std::string::npos);
}

TEST(Ground, NamingIsDeterministic)
{
    auto f = formula("F(x = 1) & G(wnext(x) >= x)");
    ClosureTable a(f);
    ClosureTable b(f);
    EXPECT_EQ(to_smtlib(ground(snf(f), 2, a)), to_smtlib(ground(snf(f), 2, b)));
}

TEST(Ground, MissingTomorrowIsAnInternalError)
{
    ClosureTable ct(formula("x = 0"));
    EXPECT_THROW(ground(formula("X(x = 0)"), 0, ct), InternalError);
}

TEST(Ground, StepsStayWithinOneStep)
{
    fixtures::RandomFormula gen(42);
    for (int n = 0; n < 500; ++n) {
        auto f = gen.temporal(4);
        ClosureTable ct(f);
        std::size_t i = static_cast<std::size_t>(n % 7);
        auto out = ground(snf(f), i, ct);
        for_each_term(out, [&](const GroundTerm& t) {
            if (t.kind() == GroundTerm::Kind::SteppedVar) {
                EXPECT_TRUE(t.step() == i || t.step() == i + 1);
            }
        });
        for_each_node(out, [&](const GroundFormula& node) {
            if (node.kind() == GroundFormula::Kind::StepLit || node.kind() == GroundFormula::Kind::Grounded) {
                EXPECT_EQ(node.step(), i);
            }
        });
    }
}

TEST(Symbols, OneKindPerPaperSymbol)
{
    EXPECT_EQ(stepped_name("x", 3), "x@3");
    EXPECT_EQ(step_lit_name(3), "_l@3");
    EXPECT_EQ(grounded_name(4, 3), "_g@4@3");
    EXPECT_EQ(GroundFormula::step_lit(3).kind(), GroundFormula::Kind::StepLit);
    EXPECT_EQ(GroundFormula::grounded(4, 3).kind(), GroundFormula::Kind::Grounded);
    EXPECT_EQ(GroundTerm::stepped_var("x", 3).kind(), GroundTerm::Kind::SteppedVar);
    EXPECT_EQ(smt_symbol("x@3"), "|x@3|");
    EXPECT_EQ(smt_symbol("x"), "x");
    EXPECT_EQ(smt_symbol("and"), "|and|");
}

TEST(Unravel, BaseOfFirstOrderFormula) { EXPECT_EQ(to_smtlib(Encoder(formula("x = 0")).unravel_base()), "(= |x@0| 0)"); }

TEST(Unravel, BaseOfEventually)
{
    auto f = formula("F(x = 1)");
    Encoder enc(f);
    EXPECT_EQ(to_smtlib(enc.unravel_base()), "(or (= |x@0| 1) " + g(enc.closure(), TF::tomorrow(f), 0) + ")");
}

TEST(Unravel, BaseOfTomorrow)
{
    auto f = formula("X(x = 0)");
    Encoder enc(f);
    EXPECT_EQ(to_smtlib(enc.unravel_base()), g(enc.closure(), f, 0));
}

TEST(Unravel, DeltaOfTomorrow)
{
    auto f = formula("X(x = 0)");
    Encoder enc(f);
    EXPECT_EQ(to_smtlib(enc.unravel_delta(0)), "(and |_l@0| (= " + g(enc.closure(), f, 0) + " (= |x@1| 0)))");
}

TEST(Unravel, DeltaWithoutRequests)
{
    Encoder enc(formula("x = 0 & y = 1"));
    EXPECT_EQ(to_smtlib(enc.unravel_delta(0)), "|_l@0|");
    EXPECT_EQ(to_smtlib(enc.unravel_delta(7)), "|_l@7|");
}

TEST(Unravel, DeltaOfAlways)
{
    auto f = formula("G(wnext(x) > x)");
    Encoder enc(f);
    auto w = TF::weak_tomorrow(f);
    auto expected = "(and |_l@2| (= " + g(enc.closure(), w, 2) + " (and (=> |_l@3| (> |x@4| |x@3|)) "
        + g(enc.closure(), w, 3) + ")))";
    EXPECT_EQ(to_smtlib(enc.unravel_delta(2)), expected);
}

TEST(Unravel, DeltaOrdersTomorrowsBeforeWeakTomorrows)
{
    auto f = formula("G(x > 0) & X(y = 0)");
    Encoder enc(f);
    const auto& ct = enc.closure();
    auto out = to_smtlib(enc.unravel_delta(0));
    auto xpos = out.find(g(ct, formula("X(y = 0)"), 0));
    auto wpos = out.find(g(ct, TF::weak_tomorrow(formula("G(x > 0)")), 0));
    ASSERT_NE(xpos, std::string::npos);
    ASSERT_NE(wpos, std::string::npos);
    EXPECT_LT(xpos, wpos);
}

TEST(Unravel, UnravelConjoinsDeltas)
{
    auto f = formula("x = 0 U x = 1");
    Encoder enc(f);
    auto expected = GroundFormula::conj({enc.unravel_base(), enc.unravel_delta(0), enc.unravel_delta(1)});
    EXPECT_EQ(to_smtlib(enc.unravel(2)), to_smtlib(expected));
}

TEST(EmptyEncoding, NegatesTomorrowsAndTheStepLiteral)
{
    auto f = formula("X(x = 0) & (x = 0 U y = 0)");
    Encoder enc(f);
    const auto& ct = enc.closure();
    ASSERT_EQ(ct.xr().size(), 2u);
    auto out = to_smtlib(enc.empty_encoding(2));
    EXPECT_EQ(out, "(and (not " + g(ct, ct[ct.xr()[0]], 2) + ") (not " + g(ct, ct[ct.xr()[1]], 2) + ") (not |_l@2|))");
    EXPECT_NE(out.find(g(ct, formula("X(x = 0)"), 2)), std::string::npos);
    EXPECT_NE(out.find(g(ct, TF::tomorrow(formula("x = 0 U y = 0")), 2)), std::string::npos);
}

TEST(EmptyEncoding, NoRequests)
{
    EXPECT_EQ(to_smtlib(Encoder(formula("G(x = 0)")).empty_encoding(0)), "(not |_l@0|)");
    auto f = formula("F(x = 0)");
    EXPECT_EQ(to_smtlib(Encoder(f).empty_encoding(3)), to_smtlib(Encoder(f).empty_encoding(3)));
}

TEST(Omega, SinglePoisedNode)
{
    BranchSummary b{{{formula("x = 0")}}};
    EXPECT_EQ(to_smtlib(omega(b)), "(= |x@0| 0)");
}

TEST(Omega, TwoPoisedNodes)
{
    BranchSummary b{{{formula("next(x) = 1")}, {formula("x = 1")}}};
    EXPECT_EQ(to_smtlib(omega(b)), "(and (and |_l@0| (= |x@1| 1)) (= |x@1| 1) |_l@0|)");
}

TEST(Omega, EmptyLabels)
{
    BranchSummary b{{{}, {}, {}}};
    EXPECT_EQ(to_smtlib(omega(b)), "(and |_l@0| |_l@1|)");
}
