#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ltlfmt {

class Sort {
public:
    enum class Kind { Int, Real, Uninterpreted };

    static Sort integer() { return Sort{Kind::Int, {}}; }
    static Sort real() { return Sort{Kind::Real, {}}; }
    static Sort uninterpreted(std::string name) { return Sort{Kind::Uninterpreted, std::move(name)}; }

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool is_numeric() const { return kind_ != Kind::Uninterpreted; }

    /// "Int", "Real" or the declared sort name.
    std::string to_string() const;

    friend bool operator==(const Sort&, const Sort&) = default;
    friend auto operator<=>(const Sort&, const Sort&) = default;

private:
    Sort(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
};

struct FunctionDecl {
    std::vector<Sort> args;
    Sort result;
    friend bool operator==(const FunctionDecl&, const FunctionDecl&) = default;
};

struct PredicateDecl {
    std::vector<Sort> args;
    friend bool operator==(const PredicateDecl&, const PredicateDecl&) = default;
};

/// Declared symbols of a problem. State variables are the ones that change
/// along a trace; constants, functions and predicates are rigid. Quantified
/// variables live in their binders, not here.
class Signature {
public:
    enum class Category { Sort, StateVar, Constant, Function, Predicate };

    void declare_sort(const std::string& name);
    void declare_var(const std::string& name, Sort sort);
    void declare_constant(const std::string& name, Sort sort);
    void declare_function(const std::string& name, std::vector<Sort> args, Sort result);
    void declare_predicate(const std::string& name, std::vector<Sort> args);

    std::optional<Category> category(const std::string& name) const;
    bool contains(const std::string& name) const { return category(name).has_value(); }

    std::optional<Sort> var_sort(const std::string& name) const;
    std::optional<Sort> constant_sort(const std::string& name) const;
    const FunctionDecl* function(const std::string& name) const;
    const PredicateDecl* predicate(const std::string& name) const;
    bool has_sort(const Sort& sort) const;

    const std::vector<std::string>& sorts() const { return sorts_; }
    const std::map<std::string, Sort>& state_vars() const { return vars_; }
    const std::map<std::string, Sort>& constants() const { return constants_; }
    const std::map<std::string, FunctionDecl>& functions() const { return functions_; }
    const std::map<std::string, PredicateDecl>& predicates() const { return predicates_; }

    /// Declares a new state variable named `<prefix><n>` with the first unused n.
    std::string fresh_var(const std::string& prefix, Sort sort);

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    void require_fresh(const std::string& name) const;
    void require_sort(const Sort& sort) const;

    std::vector<std::string> sorts_;
    std::map<std::string, Sort> vars_;
    std::map<std::string, Sort> constants_;
    std::map<std::string, FunctionDecl> functions_;
    std::map<std::string, PredicateDecl> predicates_;
    unsigned fresh_counter_ = 0;
};

} // namespace ltlfmt
