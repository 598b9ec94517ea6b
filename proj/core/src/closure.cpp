#include "ltlfmt/closure.hpp"

#include <algorithm>
#include <unordered_set>

#include "ltlfmt/errors.hpp"

namespace ltlfmt {

ClosureTable::ClosureTable(const TemporalFormula& root)
{
    visit(root);
}

std::size_t ClosureTable::add(const TemporalFormula& f)
{
    auto [it, inserted] = index_.try_emplace(f, entries_.size());
    if (inserted) {
        entries_.push_back(f);
        if (f.kind() == TemporalFormula::Kind::X)
            xr_.push_back(it->second);
        else if (f.kind() == TemporalFormula::Kind::WX)
            wxr_.push_back(it->second);
    }
    return it->second;
}

void ClosureTable::visit(const TemporalFormula& f)
{
    if (index_.contains(f))
        return;
    add(f);
    for (const auto& c : f.children())
        visit(c);
    if (f.kind() == TemporalFormula::Kind::U)
        visit(TemporalFormula::tomorrow(f));
    else if (f.kind() == TemporalFormula::Kind::R)
        visit(TemporalFormula::weak_tomorrow(f));
}

std::optional<std::size_t> ClosureTable::find(const TemporalFormula& f) const
{
    auto it = index_.find(f);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t ClosureTable::id_of(const TemporalFormula& f) const
{
    auto id = find(f);
    if (!id)
        throw InternalError("formula missing from closure");
    return *id;
}

std::size_t count_subformulas(const TemporalFormula& f)
{
    std::unordered_set<TemporalFormula, TemporalFormulaHash> seen;
    std::vector<TemporalFormula> stack{f};
    while (!stack.empty()) {
        auto g = stack.back();
        stack.pop_back();
        if (!seen.insert(g).second)
            continue;
        for (const auto& c : g.children())
            stack.push_back(c);
    }
    return seen.size();
}

AtomStrength classify_atom(const Atom& a)
{
    bool strong = std::any_of(a.args.begin(), a.args.end(), [](const Term& t) { return t.contains_next(); });
    if (strong)
        return AtomStrength::Strong;
    bool weak = std::any_of(a.args.begin(), a.args.end(), [](const Term& t) { return t.contains_wnext(); });
    return weak ? AtomStrength::Weak : AtomStrength::Rigid;
}

} // namespace ltlfmt
