#include "ltlfmt/trace.hpp"

namespace ltlfmt {

void Interpretation::set_function(const std::string& name, std::vector<Value> args, Value result)
{
    functions_[name][std::move(args)] = std::move(result);
}

void Interpretation::set_predicate(const std::string& name, std::vector<Value> args, bool holds)
{
    predicates_[name][std::move(args)] = Value::boolean(holds);
}

std::optional<Value> Interpretation::constant(const std::string& name) const
{
    if (auto it = constants_.find(name); it != constants_.end())
        return it->second;
    return std::nullopt;
}

std::optional<Value> Interpretation::function(const std::string& name, const std::vector<Value>& args) const
{
    auto it = functions_.find(name);
    if (it == functions_.end())
        return std::nullopt;
    if (auto jt = it->second.find(args); jt != it->second.end())
        return jt->second;
    return std::nullopt;
}

std::optional<bool> Interpretation::predicate(const std::string& name, const std::vector<Value>& args) const
{
    auto it = predicates_.find(name);
    if (it == predicates_.end())
        return std::nullopt;
    if (auto jt = it->second.find(args); jt != it->second.end())
        return jt->second.boolean();
    return std::nullopt;
}

const std::vector<Value>* Interpretation::domain(const Sort& sort) const
{
    auto it = domains_.find(sort);
    return it == domains_.end() ? nullptr : &it->second;
}

} // namespace ltlfmt
