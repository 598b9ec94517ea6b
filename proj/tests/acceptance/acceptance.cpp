// Acceptance checks. Prints one PASS/FAIL line per criterion; exits non-zero
// if any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "ltlfmt/bench/families.hpp"
#include "ltlfmt/closure.hpp"
#include "ltlfmt/encoder/encoder.hpp"
#include "ltlfmt/enumerate.hpp"
#include "ltlfmt/parser.hpp"
#include "ltlfmt/printer.hpp"
#include "ltlfmt/solver.hpp"
#include "support/random_formula.hpp"

using namespace ltlfmt;
using TF = TemporalFormula;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict9 {
    std::size_t sat = 0;
    std::size_t valid = 0;
    std::vector<std::string> failures;
} witnesses;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

SolveOptions options(std::size_t max_k, Engine engine = Engine::Encoding)
{
    SolveOptions o;
    o.max_k = max_k;
    o.backend.executable = LTLFMT_TEST_SOLVER;
    o.engine = engine;
    o.verify_witness = true;
    return o;
}

SolveOutcome run(const TF& f, const Signature& sig, const SolveOptions& o, const std::string& label)
{
    auto r = solve(f, sig, o);
    if (r.status == SolveStatus::Sat) {
        ++witnesses.sat;
        if (r.verification && r.verification->verdict == Verdict::Valid)
            ++witnesses.valid;
        else
            witnesses.failures.push_back(label);
    }
    return r;
}

std::string describe(const SolveOutcome& r)
{
    std::string s = to_string(r.status) + " k=" + std::to_string(r.k);
    if (!r.reason.empty())
        s += " (" + r.reason + ")";
    return s;
}

bool verified(const SolveOutcome& r) { return r.verification && r.verification->verdict == Verdict::Valid; }

Outcome family_sat(bench::Family fam, unsigned from, unsigned to, const std::function<std::string(unsigned, const SolveOutcome&)>& extra)
{
    Outcome out;
    for (unsigned n = from; n <= to; ++n) {
        auto p = bench::gen_benchmark(fam, n);
        auto label = bench::family_id(fam) + " N=" + std::to_string(n);
        auto r = run(p.formula, p.signature, options(300), label);
        if (r.status != SolveStatus::Sat)
            out.fail(label + ": " + describe(r));
        else if (!verified(r))
            out.fail(label + ": witness not verified");
        else if (auto why = extra(n, r); !why.empty())
            out.fail(label + ": " + why);
    }
    return out;
}

Outcome criterion1()
{
    auto start = Clock::now();
    auto out = family_sat(bench::Family::LiaCounter, 1, 50, [](unsigned n, const SolveOutcome& r) -> std::string {
        if (r.k != n)
            return "k=" + std::to_string(r.k);
        if (r.trace->length() != n + 1)
            return "length " + std::to_string(r.trace->length());
        for (unsigned i = 0; i <= n; ++i)
            if (r.trace->states[i].at("x") != Value::number(Rational(i)))
                return "x_" + std::to_string(i) + " = " + to_string(r.trace->states[i].at("x"));
        return {};
    });
    auto secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 300)
        out.fail("suite took " + std::to_string(secs) + " s");
    if (out.pass)
        out.detail = "N=1..50 SAT with k=N and x_i=i, " + std::to_string(secs) + " s";
    return out;
}

Outcome criterion2()
{
    // terminating depth per N, frozen from the first run
    const std::map<unsigned, std::size_t> frozen{{2, 0}, {3, 1}, {4, 2}, {5, 3}, {6, 4}, {7, 5}, {8, 6}};
    Outcome out;
    for (auto [n, k] : frozen) {
        auto p = bench::gen_benchmark(bench::Family::LiaSumUnsat, n);
        auto label = "lia-sum-unsat N=" + std::to_string(n);
        auto r = run(p.formula, p.signature, options(300), label);
        if (r.status != SolveStatus::Unsat)
            out.fail(label + ": " + describe(r));
        else if (r.k != k)
            out.fail(label + ": UNSAT at k=" + std::to_string(r.k) + ", frozen value " + std::to_string(k));
    }
    if (out.pass)
        out.detail = "N=2..8 UNSAT at the frozen depths k=N-2";
    return out;
}

Outcome criterion3()
{
    auto none = [](unsigned, const SolveOutcome&) { return std::string(); };
    auto out = family_sat(bench::Family::LraDecade, 1, 15, none);
    auto geo = family_sat(bench::Family::LraGeometric, 1, 15, none);
    if (!geo.pass)
        out.fail(geo.detail);
    if (out.pass)
        out.detail = "lra-decade and lra-geometric N=1..15 SAT, witnesses verified";
    return out;
}

Outcome criterion4()
{
    auto out = family_sat(bench::Family::EufLiaRecursion, 1, 30, [](unsigned n, const SolveOutcome& r) -> std::string {
        if (r.trace->length() != n + 1)
            return "length " + std::to_string(r.trace->length());
        return {};
    });
    if (out.pass)
        out.detail = "N=1..30 SAT, verified witnesses of length N+1";
    return out;
}

Outcome criterion5()
{
    Outcome out;
    auto p = parse("var x : Int; formula: x = 3 & G(exists y:Int . x = y + y);");
    auto r = run(p.formula, p.signature, options(300), "even three");
    if (r.status != SolveStatus::Unsat || r.k != 0 || r.checks != 1)
        out.fail(describe(r) + " after " + std::to_string(r.checks) + " checks");
    else
        out.detail = "UNSAT at k=0 after one check";
    return out;
}

Outcome criterion6()
{
    Outcome out;
    auto p = parse("var x : Int; formula: G(x > 5) & F(x < 0);");
    auto r = run(p.formula, p.signature, options(10), "G(x>5) & F(x<0)");
    if (r.status != SolveStatus::Unknown || r.reason != "bound-exhausted")
        out.fail(describe(r));
    else
        out.detail = "UNKNOWN (bound-exhausted) at --max-k 10";
    return out;
}

Outcome criterion7()
{
    Outcome out;
    fixtures::RandomFormula gen(2024);
    auto sig = fixtures::RandomFormula::signature();
    auto range = TF::always(parse_formula("0 <= x & x <= 1 & 0 <= y & y <= 1", sig));
    FiniteDomains domains{{Sort::integer(), int_range(0, 1)}};
    const int total = 250;
    int models = 0;
    int unsat = 0;
    int divergences = 0;
    for (int n = 0; n < total; ++n) {
        auto f = TF::conj(gen.temporal(n % 4 + 1), range);
        auto oracle = enumerate_sat(f, sig, domains, 4);
        auto label = "random #" + std::to_string(n);
        auto r = run(f, sig, options(6), label);
        bool diverged = false;
        if (oracle) {
            ++models;
            diverged = r.status != SolveStatus::Sat || !verified(r);
        }
        if (r.status == SolveStatus::Unsat) {
            ++unsat;
            diverged = diverged || oracle.has_value();
        }
        if (diverged) {
            ++divergences;
            out.fail(label + ": " + to_string(f) + " oracle=" + (oracle ? "model" : "none") + " solver=" + describe(r));
        }
    }
    if (out.pass)
        out.detail = std::to_string(total) + " formulas, " + std::to_string(models) + " with models, "
            + std::to_string(unsat) + " UNSAT, 0 divergences";
    else
        out.detail += " (" + std::to_string(divergences) + " divergences)";
    return out;
}

Outcome criterion8()
{
    Outcome out;
    std::ifstream in(LTLFMT_ACCEPTANCE_DIR "/engine_corpus.txt");
    Signature sig;
    sig.declare_var("x", Sort::integer());
    sig.declare_var("y", Sort::integer());
    int count = 0;
    std::map<std::string, int> statuses;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line.front() == '#')
            continue;
        ++count;
        auto f = parse_formula(line, sig);
        auto r = run(f, sig, options(5, Engine::Both), "corpus: " + line);
        ++statuses[to_string(r.status)];
        if (r.divergence)
            out.fail(line + ": " + *r.divergence);
    }
    if (count < 50)
        out.fail("corpus has only " + std::to_string(count) + " formulas");
    if (out.pass) {
        out.detail = std::to_string(count) + " formulas, 0 divergences (";
        for (auto [s, n] : statuses)
            out.detail += s + " " + std::to_string(n) + " ";
        out.detail.back() = ')';
    }
    return out;
}

Outcome criterion9()
{
    Outcome out;
    if (witnesses.valid != witnesses.sat)
        out.fail(std::to_string(witnesses.sat - witnesses.valid) + " of " + std::to_string(witnesses.sat)
                 + " SAT witnesses failed, first: " + witnesses.failures.front());
    else
        out.detail = std::to_string(witnesses.valid) + "/" + std::to_string(witnesses.sat) + " SAT witnesses verified";
    return out;
}

Outcome criterion10()
{
    Outcome out;
    Signature sig;
    sig.declare_var("x", Sort::integer());
    sig.declare_var("p", Sort::integer());
    sig.declare_var("q", Sort::integer());
    sig.declare_constant("c", Sort::integer());
    sig.declare_function("f", {Sort::integer(), Sort::integer()}, Sort::integer());
    auto F = [&](const char* text) { return parse_formula(text, sig); };
    auto g = [](const ClosureTable& ct, const TF& f, std::size_t i) {
        return "|" + grounded_name(ct.id_of(f), i) + "|";
    };
    int checked = 0;
    auto expect = [&](const std::string& what, const std::string& got, const std::string& want) {
        ++checked;
        if (got != want)
            out.fail(what + ": got " + got + ", expected " + want);
    };
    auto x = Term::state_var("x");

    expect("step next(x) at 2", to_smtlib(step_term(Term::next(x), 2)), "|x@3|");
    expect("step c at 5", to_smtlib(step_term(Term::constant("c"), 5)), "c");
    expect("step f(x, wnext(x)) at 0", to_smtlib(step_term(Term::apply("f", {x, Term::wnext(x)}), 0)),
           "(f |x@0| |x@1|)");

    expect("L_0 next(x)=x+1", to_smtlib(label_L(F("next(x) = x + 1").fo(), 0)), "(and |_l@0| (= |x@1| (+ |x@0| 1)))");
    expect("L_2 wnext(x)>x", to_smtlib(label_L(F("wnext(x) > x").fo(), 2)), "(=> |_l@2| (> |x@3| |x@2|))");
    expect("L_4 x=y+y", to_smtlib(label_L(F("exists y:Int . x = y + y").fo(), 4)),
           "(exists ((y Int)) (= |x@4| (+ y y)))");

    auto until = F("p = 1 U q = 1");
    ClosureTable ct_until(until);
    ++checked;
    if (!(snf(until) == TF::disj(until.rhs(), TF::conj(until.lhs(), TF::tomorrow(until)))))
        out.fail("snf(p U q)");
    auto xa = F("X(p = 1)");
    ++checked;
    if (!(snf(xa) == xa))
        out.fail("snf(X a)");
    auto glam = F("G(x > 0)");
    ClosureTable ct_g(glam);
    expect("snf_1(G lambda) grounded", to_smtlib(ground(snf(glam), 1, ct_g)),
           "(and (> |x@1| 0) " + g(ct_g, TF::weak_tomorrow(glam), 1) + ")");

    expect("ground snf_0(p U q)", to_smtlib(ground(snf(until), 0, ct_until)),
           "(or (= |q@0| 1) (and (= |p@0| 1) " + g(ct_until, TF::tomorrow(until), 0) + "))");
    auto lam = F("next(x) = 1 & p < 3");
    expect("ground first-order", to_smtlib(ground(snf(lam), 4, ClosureTable(lam))),
           "(and (and |_l@4| (= |x@5| 1)) (< |p@4| 3))");
    expect("ground twice", to_smtlib(ground(snf(until), 0, ClosureTable(until))),
           to_smtlib(ground(snf(until), 0, ct_until)));

    expect("base x=0", to_smtlib(Encoder(F("x = 0")).unravel_base()), "(= |x@0| 0)");
    auto ev = F("F(x = 1)");
    Encoder enc_ev(ev);
    expect("base F(x=1)", to_smtlib(enc_ev.unravel_base()),
           "(or (= |x@0| 1) " + g(enc_ev.closure(), TF::tomorrow(ev), 0) + ")");
    Encoder enc_x(xa);
    expect("base X p", to_smtlib(enc_x.unravel_base()), g(enc_x.closure(), xa, 0));

    expect("delta X p at 0", to_smtlib(enc_x.unravel_delta(0)),
           "(and |_l@0| (= " + g(enc_x.closure(), xa, 0) + " (= |p@1| 1)))");
    expect("delta without requests", to_smtlib(Encoder(F("x = 0")).unravel_delta(3)), "|_l@3|");
    auto gw = F("G(wnext(x) > x)");
    Encoder enc_gw(gw);
    auto wx = TF::weak_tomorrow(gw);
    expect("delta G lambda at 2", to_smtlib(enc_gw.unravel_delta(2)),
           "(and |_l@2| (= " + g(enc_gw.closure(), wx, 2) + " (and (=> |_l@3| (> |x@4| |x@3|)) "
               + g(enc_gw.closure(), wx, 3) + ")))");

    auto two = F("X(p = 1) & (p = 1 U q = 1)");
    Encoder enc_two(two);
    const auto& ct_two = enc_two.closure();
    expect("empty with two requests", to_smtlib(enc_two.empty_encoding(2)),
           "(and (not " + g(ct_two, ct_two[ct_two.xr()[0]], 2) + ") (not " + g(ct_two, ct_two[ct_two.xr()[1]], 2)
               + ") (not |_l@2|))");
    expect("empty without requests", to_smtlib(Encoder(F("G(x = 0)")).empty_encoding(0)), "(not |_l@0|)");
    expect("empty is deterministic", to_smtlib(enc_two.empty_encoding(2)), to_smtlib(Encoder(two).empty_encoding(2)));

    expect("omega m=1", to_smtlib(omega({{{F("x = 0")}}})), "(= |x@0| 0)");
    expect("omega m=2", to_smtlib(omega({{{F("next(x) = 1")}, {F("x = 1")}}})),
           "(and (and |_l@0| (= |x@1| 1)) (= |x@1| 1) |_l@0|)");
    expect("omega empty labels", to_smtlib(omega({{{}, {}, {}}})), "(and |_l@0| |_l@1|)");

    if (out.pass)
        out.detail = std::to_string(checked) + " encoder examples reproduced exactly";
    return out;
}

} // namespace

int main()
{
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},  {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10},
    };
    bool all = true;
    for (const auto& [id, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << std::endl;
    }
    return all ? 0 : 1;
}
