#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltlfmt/signature.hpp"
#include "ltlfmt/value.hpp"

namespace ltlfmt {

/// Rigid part of a structure: constants, function and predicate tables, and
/// optionally a finite carrier per sort (needed to evaluate quantifiers
/// directly).
class Interpretation {
public:
    void set_constant(const std::string& name, Value v) { constants_[name] = std::move(v); }
    void set_function(const std::string& name, std::vector<Value> args, Value result);
    void set_predicate(const std::string& name, std::vector<Value> args, bool holds);
    void set_domain(const Sort& sort, std::vector<Value> values) { domains_[sort] = std::move(values); }

    std::optional<Value> constant(const std::string& name) const;
    std::optional<Value> function(const std::string& name, const std::vector<Value>& args) const;
    std::optional<bool> predicate(const std::string& name, const std::vector<Value>& args) const;
    const std::vector<Value>* domain(const Sort& sort) const;

    using Table = std::map<std::vector<Value>, Value>;
    const std::map<std::string, Value>& constants() const { return constants_; }
    const std::map<std::string, Table>& functions() const { return functions_; }
    const std::map<std::string, Table>& predicates() const { return predicates_; }

    friend bool operator==(const Interpretation&, const Interpretation&) = default;

private:
    std::map<std::string, Value> constants_;
    std::map<std::string, Table> functions_;
    std::map<std::string, Table> predicates_;
    std::map<Sort, std::vector<Value>> domains_;
};

using State = std::map<std::string, Value>;
using Environment = std::map<std::string, Value>;

/// A finite word: one assignment of the state variables per position, over
/// a single shared interpretation.
struct Trace {
    std::vector<State> states;
    Interpretation interp;
    /// Some values were not fixed by the solver model and were defaulted.
    bool model_incomplete = false;

    std::size_t length() const { return states.size(); }
    std::size_t last() const { return states.size() - 1; }

    friend bool operator==(const Trace&, const Trace&) = default;
};

/// Keeps only the state variables for which `keep` holds.
template <typename Pred>
Trace project(const Trace& t, Pred keep)
{
    Trace out = t;
    for (auto& s : out.states)
        std::erase_if(s, [&](const auto& kv) { return !keep(kv.first); });
    return out;
}

} // namespace ltlfmt
