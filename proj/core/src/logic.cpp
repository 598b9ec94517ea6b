#include "ltlfmt/smt/logic.hpp"

#include "ltlfmt/sort_check.hpp"

namespace ltlfmt::smt {

namespace {

struct Usage {
    bool uf = false;
    bool ints = false;
    bool reals = false;
    bool nonlinear = false;

    void sort(const Sort& s)
    {
        ints = ints || s.kind() == Sort::Kind::Int;
        reals = reals || s.kind() == Sort::Kind::Real;
        uf = uf || s.kind() == Sort::Kind::Uninterpreted;
    }

    void term(const Term& t, const Signature& sig)
    {
        switch (t.kind()) {
        case Term::Kind::StateVar:
            if (auto s = sig.var_sort(t.name()))
                sort(*s);
            break;
        case Term::Kind::Const:
            if (auto s = sig.constant_sort(t.name()))
                sort(*s);
            break;
        case Term::Kind::IntLit:
            ints = true;
            break;
        case Term::Kind::RatLit:
            reals = true;
            break;
        case Term::Kind::Apply:
            uf = true;
            if (const auto* f = sig.function(t.name())) {
                for (const auto& a : f->args)
                    sort(a);
                sort(f->result);
            }
            break;
        case Term::Kind::Arith:
            if (t.op() == ArithOp::Div && !t.args()[1].is_literal())
                nonlinear = true;
            if (t.op() == ArithOp::Mul && !t.args()[0].is_literal() && !t.args()[1].is_literal())
                nonlinear = true;
            break;
        default:
            break;
        }
        for (const auto& a : t.args())
            term(a, sig);
    }
};

} // namespace

std::string infer_logic(const TemporalFormula& phi, const Signature& sig)
{
    if (has_quantifier(phi))
        return "ALL";
    Usage u;
    for_each_atom(phi, [&](const Atom& a) {
        if (a.relation == Relation::Predicate) {
            u.uf = true;
            if (const auto* p = sig.predicate(a.predicate))
                for (const auto& s : p->args)
                    u.sort(s);
        }
        for (const auto& t : a.args)
            u.term(t, sig);
    });

    std::string logic = "QF_";
    if (u.uf)
        logic += "UF";
    if (u.ints || u.reals) {
        logic += u.nonlinear ? "N" : "L";
        logic += u.ints && u.reals ? "IRA" : u.ints ? "IA" : "RA";
    } else if (!u.uf) {
        logic += "UF";
    }
    return logic;
}

} // namespace ltlfmt::smt
