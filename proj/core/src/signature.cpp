#include "ltlfmt/signature.hpp"

#include <algorithm>

#include "ltlfmt/errors.hpp"

namespace ltlfmt {

std::string Sort::to_string() const
{
    switch (kind_) {
    case Kind::Int:
        return "Int";
    case Kind::Real:
        return "Real";
    case Kind::Uninterpreted:
        return name_;
    }
    return name_;
}

void Signature::require_fresh(const std::string& name) const
{
    if (contains(name))
        throw SortError("duplicate declaration of " + name);
}

void Signature::require_sort(const Sort& sort) const
{
    if (!has_sort(sort))
        throw SortError("undeclared sort " + sort.to_string());
}

void Signature::declare_sort(const std::string& name)
{
    if (name == "Int" || name == "Real")
        throw SortError("duplicate declaration of " + name);
    require_fresh(name);
    sorts_.push_back(name);
}

void Signature::declare_var(const std::string& name, Sort sort)
{
    require_fresh(name);
    require_sort(sort);
    vars_.emplace(name, std::move(sort));
}

void Signature::declare_constant(const std::string& name, Sort sort)
{
    require_fresh(name);
    require_sort(sort);
    constants_.emplace(name, std::move(sort));
}

void Signature::declare_function(const std::string& name, std::vector<Sort> args, Sort result)
{
    require_fresh(name);
    if (args.empty())
        throw SortError("function " + name + " needs at least one argument; declare a constant instead");
    for (const auto& s : args)
        require_sort(s);
    require_sort(result);
    functions_.emplace(name, FunctionDecl{std::move(args), std::move(result)});
}

void Signature::declare_predicate(const std::string& name, std::vector<Sort> args)
{
    require_fresh(name);
    for (const auto& s : args)
        require_sort(s);
    predicates_.emplace(name, PredicateDecl{std::move(args)});
}

std::optional<Signature::Category> Signature::category(const std::string& name) const
{
    if (std::find(sorts_.begin(), sorts_.end(), name) != sorts_.end())
        return Category::Sort;
    if (vars_.contains(name))
        return Category::StateVar;
    if (constants_.contains(name))
        return Category::Constant;
    if (functions_.contains(name))
        return Category::Function;
    if (predicates_.contains(name))
        return Category::Predicate;
    return std::nullopt;
}

std::optional<Sort> Signature::var_sort(const std::string& name) const
{
    auto it = vars_.find(name);
    if (it == vars_.end())
        return std::nullopt;
    return it->second;
}

std::optional<Sort> Signature::constant_sort(const std::string& name) const
{
    auto it = constants_.find(name);
    if (it == constants_.end())
        return std::nullopt;
    return it->second;
}

const FunctionDecl* Signature::function(const std::string& name) const
{
    auto it = functions_.find(name);
    return it == functions_.end() ? nullptr : &it->second;
}

const PredicateDecl* Signature::predicate(const std::string& name) const
{
    auto it = predicates_.find(name);
    return it == predicates_.end() ? nullptr : &it->second;
}

bool Signature::has_sort(const Sort& sort) const
{
    if (sort.kind() != Sort::Kind::Uninterpreted)
        return true;
    return std::find(sorts_.begin(), sorts_.end(), sort.name()) != sorts_.end();
}

std::string Signature::fresh_var(const std::string& prefix, Sort sort)
{
    std::string name;
    do {
        name = prefix + std::to_string(fresh_counter_++);
    } while (contains(name));
    declare_var(name, std::move(sort));
    return name;
}

} // namespace ltlfmt
