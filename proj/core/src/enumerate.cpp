#include "ltlfmt/enumerate.hpp"

#include <set>

#include "ltlfmt/errors.hpp"
#include "ltlfmt/semantics.hpp"

namespace ltlfmt {

namespace {

struct Symbols {
    std::set<std::string> constants;
    std::set<std::string> functions;
    std::set<std::string> predicates;

    void collect(const Term& t)
    {
        if (t.kind() == Term::Kind::Const)
            constants.insert(t.name());
        if (t.kind() == Term::Kind::Apply)
            functions.insert(t.name());
        for (const auto& a : t.args())
            collect(a);
    }
};

// One choice point of the interpretation.
struct Slot {
    enum class Kind { Constant, Function, Predicate } kind;
    std::string name;
    std::vector<Value> args;
    const std::vector<Value>* choices;
};

const std::vector<Value>& domain_of(const FiniteDomains& domains, const Sort& sort)
{
    auto it = domains.find(sort);
    if (it == domains.end() || it->second.empty())
        throw Error("enumerate_sat: no finite domain for sort " + sort.to_string());
    return it->second;
}

std::vector<std::vector<Value>> tuples(const FiniteDomains& domains, const std::vector<Sort>& sorts)
{
    std::vector<std::vector<Value>> out{{}};
    for (const auto& s : sorts) {
        std::vector<std::vector<Value>> next;
        for (const auto& prefix : out)
            for (const auto& v : domain_of(domains, s)) {
                next.push_back(prefix);
                next.back().push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t limit)
{
    if (a == 0 || b == 0)
        return 0;
    if (a > limit / b)
        return limit + 1;
    return a * b;
}

// Advances a mixed-radix counter; false once it wraps around.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix)
{
    for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < radix[k])
            return true;
        digits[k] = 0;
    }
    return false;
}

} // namespace

std::vector<Value> int_range(long lo, long hi)
{
    std::vector<Value> out;
    for (long v = lo; v <= hi; ++v)
        out.push_back(Value::number(v));
    return out;
}

std::optional<Trace> enumerate_sat(const TemporalFormula& f, const Signature& sig, const FiniteDomains& domains,
                                   std::size_t max_len, std::size_t cap)
{
    Symbols used;
    for_each_atom(f, [&](const Atom& a) {
        if (a.relation == Relation::Predicate)
            used.predicates.insert(a.predicate);
        for (const auto& t : a.args)
            used.collect(t);
    });

    static const std::vector<Value> booleans{Value::boolean(false), Value::boolean(true)};
    std::vector<Slot> slots;
    for (const auto& c : used.constants)
        slots.push_back({Slot::Kind::Constant, c, {}, &domain_of(domains, *sig.constant_sort(c))});
    for (const auto& fn : used.functions) {
        const auto* decl = sig.function(fn);
        for (auto& args : tuples(domains, decl->args))
            slots.push_back({Slot::Kind::Function, fn, std::move(args), &domain_of(domains, decl->result)});
    }
    for (const auto& p : used.predicates)
        for (auto& args : tuples(domains, sig.predicate(p)->args))
            slots.push_back({Slot::Kind::Predicate, p, std::move(args), &booleans});

    std::vector<std::string> vars;
    std::vector<const std::vector<Value>*> var_domains;
    for (const auto& [name, sort] : sig.state_vars()) {
        vars.push_back(name);
        var_domains.push_back(&domain_of(domains, sort));
    }

    std::size_t interp_count = 1;
    for (const auto& s : slots)
        interp_count = saturating_mul(interp_count, s.choices->size(), cap);
    std::size_t state_count = 1;
    for (const auto* d : var_domains)
        state_count = saturating_mul(state_count, d->size(), cap);
    std::size_t total = 0;
    std::size_t traces = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
        traces = saturating_mul(traces, state_count, cap);
        total = std::min(cap + 1, total + saturating_mul(traces, interp_count, cap));
    }
    if (total > cap)
        throw Error("enumerate_sat: search space exceeds the cap of " + std::to_string(cap) + " candidates");

    std::vector<std::size_t> slot_radix;
    for (const auto& s : slots)
        slot_radix.push_back(s.choices->size());

    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> slot_digits(slots.size(), 0);
        do {
            Trace trace;
            for (const auto& [sort, values] : domains)
                trace.interp.set_domain(sort, values);
            for (std::size_t k = 0; k < slots.size(); ++k) {
                const auto& s = slots[k];
                const auto& v = (*s.choices)[slot_digits[k]];
                switch (s.kind) {
                case Slot::Kind::Constant:
                    trace.interp.set_constant(s.name, v);
                    break;
                case Slot::Kind::Function:
                    trace.interp.set_function(s.name, s.args, v);
                    break;
                case Slot::Kind::Predicate:
                    trace.interp.set_predicate(s.name, s.args, v.boolean());
                    break;
                }
            }

            std::vector<std::size_t> radix;
            for (std::size_t pos = 0; pos < len; ++pos)
                for (const auto* d : var_domains)
                    radix.push_back(d->size());
            std::vector<std::size_t> digits(radix.size(), 0);
            trace.states.assign(len, State{});
            do {
                for (std::size_t pos = 0; pos < len; ++pos)
                    for (std::size_t v = 0; v < vars.size(); ++v)
                        trace.states[pos][vars[v]] = (*var_domains[v])[digits[pos * vars.size() + v]];
                if (sat_temporal(f, trace, 0))
                    return trace;
            } while (advance(digits, radix));
        } while (advance(slot_digits, slot_radix));
    }
    return std::nullopt;
}

} // namespace ltlfmt
