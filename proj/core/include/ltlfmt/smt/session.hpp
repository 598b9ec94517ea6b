#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ltlfmt/encoder/ground.hpp"
#include "ltlfmt/smt/process.hpp"
#include "ltlfmt/smt/sexpr.hpp"
#include "ltlfmt/trace.hpp"

namespace ltlfmt::smt {

/// Path of the solver found at configure time.
const char* default_solver();

struct SolverConfig {
    std::string executable = default_solver();
    /// Arguments making the solver read SMT-LIB from stdin.
    std::vector<std::string> args{"-in"};
    /// Empty: set-logic is not sent.
    std::string logic;
    /// Per check; 0 disables the limit.
    unsigned timeout_ms = 60000;
    /// When non-empty, every byte sent to the solver is copied here.
    std::string transcript_path;
};

enum class CheckStatus { Sat, Unsat, Unknown };

struct CheckResult {
    CheckStatus status;
    /// Solver-reported reason for Unknown, "timeout" for time-outs.
    std::string reason;
};

std::string to_string(CheckStatus s);

/// An incremental SMT-LIB session with one solver process.
///
/// Symbols are declared on first use at the sort the signature gives them
/// (`_l@i` and `_g@...` as Bool); declarations are scoped like assertions.
class Session {
public:
    Session(const SolverConfig& cfg, const Signature& sig);
    ~Session();

    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    void assert_formula(const GroundFormula& f);
    CheckResult check();
    void push();
    void pop();
    void close();

    std::size_t scope_depth() const { return scopes_.size() - 1; }
    bool is_declared(const std::string& symbol) const;
    std::size_t checks() const { return checks_; }

    /// Values of declared symbols after a Sat check, by unquoted name.
    /// Undeclared symbols are left out of the result.
    std::map<std::string, Value> model_values(const std::vector<std::string>& symbols);

    /// Values of arbitrary terms after a Sat check.
    std::vector<Value> term_values(const std::vector<GroundTerm>& terms);
    std::vector<bool> formula_values(const std::vector<GroundFormula>& formulas);

    /// Table for every constant, function application and predicate
    /// application occurring in the current assertions.
    Interpretation model_interpretation();

    /// Sends a raw command and returns its response.
    SExpr command(const std::string& text);

private:
    struct Scope {
        std::vector<std::string> symbols;
        std::vector<GroundTerm> applications;
        std::vector<GroundFormula> predicate_atoms;
    };

    void send(const std::string& text);
    SExpr read_response(std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);
    void expect_success(const std::string& text);
    void declare_symbols(const GroundFormula& f);
    void declare(const std::string& symbol, const std::string& command);
    std::optional<Sort> sort_of(const GroundTerm& t) const;
    Value parse_model_value(const SExpr& e, const std::optional<Sort>& sort);
    std::vector<SExpr> get_values(const std::vector<std::string>& exprs);
    void require_open() const;

    SolverConfig cfg_;
    Signature sig_;
    std::unique_ptr<Process> process_;
    std::ofstream transcript_;
    std::string buffer_;
    std::vector<Scope> scopes_;
    struct Declared {
        std::size_t scope;
        std::optional<Sort> sort; // nullopt: Bool or a function symbol
    };
    std::map<std::string, Declared> declared_;
    std::string comments_;
    std::map<std::string, std::size_t> seen_apps_;
    std::map<std::string, std::map<std::string, std::size_t>> elements_;
    bool last_sat_ = false;
    bool dead_ = false;
    std::size_t checks_ = 0;
};

} // namespace ltlfmt::smt
