#include "ltlfmt/bench/transition_system.hpp"

#include "ltlfmt/closure.hpp"
#include "ltlfmt/parser.hpp"
#include "ltlfmt/printer.hpp"

namespace ltlfmt {

namespace {

bool temporal_free(const TemporalFormula& f)
{
    using K = TemporalFormula::Kind;
    switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Fo:
        return true;
    case K::And:
    case K::Or:
        return temporal_free(f.lhs()) && temporal_free(f.rhs());
    default:
        return false;
    }
}

// Empty when fine, otherwise the complaint.
std::string init_problem(const TemporalFormula& f)
{
    if (!temporal_free(f))
        return "initial condition must be first-order";
    std::string problem;
    for_each_atom(f, [&](const Atom& a) {
        if (problem.empty() && classify_atom(a) != AtomStrength::Rigid)
            problem = "initial condition must not mention next states: " + to_string(a);
    });
    return problem;
}

std::string trans_problem(const TemporalFormula& f)
{
    if (!temporal_free(f))
        return "transition relation must be first-order";
    std::string problem;
    for_each_atom(f, [&](const Atom& a) {
        if (problem.empty() && classify_atom(a) == AtomStrength::Strong)
            problem = "transition relation contains a strong atom: " + to_string(a);
    });
    return problem;
}

} // namespace

TemporalFormula compile_transition_system(const TransitionSystemSpec& ts)
{
    if (auto p = init_problem(ts.init); !p.empty())
        throw Error(p);
    if (auto p = trans_problem(ts.trans); !p.empty())
        throw Error(p);
    return TemporalFormula::conj(TemporalFormula::conj(ts.init, TemporalFormula::always(ts.trans)), ts.property);
}

TransitionSystemSpec parse_transition_system(std::string_view text)
{
    auto file = parse_source(text);
    for (const auto& s : file.sections)
        if (s.name != "init" && s.name != "trans" && s.name != "property")
            throw ParseError(s.line, s.column, "unexpected section '" + s.name + "' in a transition system");
    auto required = [&](const char* name) -> const Section& {
        const auto* s = file.section(name);
        if (!s)
            throw ParseError(1, 1, std::string("missing '") + name + ":' section");
        return *s;
    };

    const auto& init = required("init");
    const auto& property = required("property");
    TransitionSystemSpec ts{file.signature, elaborate_section(init, file.signature), TemporalFormula::top(),
                            elaborate_section(property, file.signature)};
    if (auto p = init_problem(ts.init); !p.empty())
        throw ParseError(init.line, init.column, p);
    if (const auto* trans = file.section("trans")) {
        ts.trans = elaborate_section(*trans, file.signature);
        if (auto p = trans_problem(ts.trans); !p.empty())
            throw ParseError(trans->line, trans->column, p);
    }
    return ts;
}

} // namespace ltlfmt
