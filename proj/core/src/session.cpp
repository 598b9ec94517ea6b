#include "ltlfmt/smt/session.hpp"

#include <set>

#include "ltlfmt/errors.hpp"

#ifndef LTLFMT_DEFAULT_SOLVER
#define LTLFMT_DEFAULT_SOLVER "z3"
#endif

namespace ltlfmt::smt {

namespace {

constexpr std::chrono::seconds command_timeout{120};
constexpr std::chrono::milliseconds check_grace{3000};

bool mentions_bound(const GroundTerm& t)
{
    if (t.kind() == GroundTerm::Kind::Bound)
        return true;
    for (const auto& a : t.args())
        if (mentions_bound(a))
            return true;
    return false;
}

std::string error_message(const SExpr& e)
{
    if (e.is_list && !e.items.empty() && e.items[0].is("error")) {
        std::string msg;
        for (std::size_t k = 1; k < e.items.size(); ++k) {
            std::string t = e.items[k].text;
            if (t.size() >= 2 && t.front() == '"' && t.back() == '"')
                t = t.substr(1, t.size() - 2);
            msg += (k > 1 ? " " : "") + t;
        }
        return msg;
    }
    return {};
}

std::string signature_of(const std::vector<Sort>& args)
{
    std::string out = "(";
    for (std::size_t k = 0; k < args.size(); ++k)
        out += (k ? " " : "") + smt_sort(args[k]);
    return out + ")";
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k)
        out += (k ? " " : "") + parts[k];
    return out;
}

} // namespace

const char* default_solver() { return LTLFMT_DEFAULT_SOLVER; }

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Sat:
        return "sat";
    case CheckStatus::Unsat:
        return "unsat";
    case CheckStatus::Unknown:
        return "unknown";
    }
    return "?";
}

Session::Session(const SolverConfig& cfg, const Signature& sig) : cfg_(cfg), sig_(sig), scopes_(1)
{
    if (cfg_.executable.empty())
        throw BackendError("no solver executable configured");
    if (!cfg_.transcript_path.empty()) {
        transcript_.open(cfg_.transcript_path);
        if (!transcript_)
            throw Error("cannot write SMT transcript " + cfg_.transcript_path);
    }
    process_ = std::make_unique<Process>(cfg_.executable, cfg_.args);

    send("(set-option :print-success true)");
    SExpr hello;
    try {
        hello = read_response(std::chrono::steady_clock::now() + std::chrono::seconds(30));
    } catch (const BackendError& e) {
        throw BackendError("solver handshake failed: " + std::string(e.what()));
    }
    if (!hello.is("success"))
        throw BackendError("solver handshake failed: got " + to_string(hello));

    expect_success("(set-option :produce-models true)");
    if (cfg_.timeout_ms > 0) {
        // Not every solver knows this option; the hard deadline in check() covers the rest.
        send("(set-option :timeout " + std::to_string(cfg_.timeout_ms) + ")");
        auto r = read_response();
        if (!r.is("success") && !r.is("unsupported"))
            throw BackendError("solver rejected the timeout option: " + to_string(r));
    }
    if (!cfg_.logic.empty())
        expect_success("(set-logic " + cfg_.logic + ")");
    for (const auto& s : sig_.sorts())
        expect_success("(declare-sort " + smt_symbol(s) + " 0)");
}

Session::~Session() { close(); }

void Session::close()
{
    if (!process_)
        return;
    if (!dead_) {
        try {
            std::string bye = "(exit)\n";
            process_->write(bye);
            if (transcript_)
                transcript_ << bye;
        } catch (const BackendError&) {
        }
    }
    process_->terminate();
    process_.reset();
    dead_ = true;
}

void Session::require_open() const
{
    if (dead_ || !process_)
        throw BackendError("solver session is closed");
}

void Session::send(const std::string& text)
{
    require_open();
    if (transcript_) {
        transcript_ << text << '\n';
        transcript_.flush();
    }
    process_->write(text + "\n");
}

SExpr Session::read_response(std::optional<std::chrono::steady_clock::time_point> deadline)
{
    auto until = deadline.value_or(std::chrono::steady_clock::now() + command_timeout);
    comments_.clear();
    for (;;) {
        std::size_t consumed = 0;
        if (auto e = take_sexpr(buffer_, consumed, &comments_)) {
            buffer_.erase(0, consumed);
            return *e;
        }
        if (!process_->read_some(buffer_, until))
            throw BackendError("solver did not answer in time");
    }
}

void Session::expect_success(const std::string& text)
{
    send(text);
    auto r = read_response();
    if (r.is("success"))
        return;
    auto msg = error_message(r);
    if (!msg.empty())
        throw BackendError("solver error on " + text + ": " + msg);
    std::string extra = comments_.empty() ? "" : " " + comments_;
    while (!extra.empty() && extra.back() == '\n')
        extra.pop_back();
    throw BackendError("solver answered " + to_string(r) + " to " + text + extra);
}

SExpr Session::command(const std::string& text)
{
    send(text);
    return read_response();
}

void Session::declare(const std::string& symbol, const std::string& command)
{
    expect_success(command);
    scopes_.back().symbols.push_back(symbol);
}

std::optional<Sort> Session::sort_of(const GroundTerm& t) const
{
    switch (t.kind()) {
    case GroundTerm::Kind::SteppedVar:
        if (auto s = sig_.var_sort(t.name()))
            return s;
        throw Error("unknown state variable " + t.name());
    case GroundTerm::Kind::Const:
        if (auto s = sig_.constant_sort(t.name()))
            return s;
        throw Error("unknown constant " + t.name());
    case GroundTerm::Kind::Element:
        return Sort::uninterpreted(t.name());
    case GroundTerm::Kind::IntLit:
        return Sort::integer();
    case GroundTerm::Kind::RealLit:
        return Sort::real();
    case GroundTerm::Kind::Apply:
        if (const auto* f = sig_.function(t.name()))
            return f->result;
        throw Error("unknown function " + t.name());
    case GroundTerm::Kind::Arith:
        if (t.op() == ArithOp::Div)
            return Sort::real();
        return sort_of(t.args().front());
    case GroundTerm::Kind::Bound:
        break;
    }
    throw Error("term has no sort outside its binder");
}

void Session::declare_symbols(const GroundFormula& f)
{
    auto declare_const = [&](const std::string& symbol, const std::optional<Sort>& sort) {
        if (declared_.contains(symbol))
            return;
        declare(symbol, "(declare-const " + smt_symbol(symbol) + " " + (sort ? smt_sort(*sort) : "Bool") + ")");
        declared_.emplace(symbol, Declared{scope_depth(), sort});
    };
    auto record = [&](const std::string& key) {
        if (seen_apps_.contains(key))
            return false;
        seen_apps_.emplace(key, scope_depth());
        return true;
    };

    for_each_term(f, [&](const GroundTerm& t) {
        switch (t.kind()) {
        case GroundTerm::Kind::SteppedVar:
            declare_const(stepped_name(t.name(), t.step()), sort_of(t));
            break;
        case GroundTerm::Kind::Const:
            declare_const(t.name(), sort_of(t));
            break;
        case GroundTerm::Kind::Element:
            declare_const(element_name(t.name(), t.element_id()), sort_of(t));
            break;
        case GroundTerm::Kind::Apply: {
            const auto* decl = sig_.function(t.name());
            if (!decl)
                throw Error("unknown function " + t.name());
            if (!declared_.contains(t.name())) {
                declare(t.name(), "(declare-fun " + smt_symbol(t.name()) + " " + signature_of(decl->args) + " "
                            + smt_sort(decl->result) + ")");
                declared_.emplace(t.name(), Declared{scope_depth(), std::nullopt});
            }
            if (!mentions_bound(t) && record(to_smtlib(t)))
                scopes_.back().applications.push_back(t);
            break;
        }
        default:
            break;
        }
    });

    for_each_node(f, [&](const GroundFormula& g) {
        switch (g.kind()) {
        case GroundFormula::Kind::StepLit:
            declare_const(step_lit_name(g.step()), std::nullopt);
            break;
        case GroundFormula::Kind::Grounded:
            declare_const(grounded_name(g.closure_id(), g.step()), std::nullopt);
            break;
        case GroundFormula::Kind::Atom: {
            if (g.relation() != Relation::Predicate)
                break;
            const auto* decl = sig_.predicate(g.predicate());
            if (!decl)
                throw Error("unknown predicate " + g.predicate());
            if (!declared_.contains(g.predicate())) {
                declare(g.predicate(),
                        "(declare-fun " + smt_symbol(g.predicate()) + " " + signature_of(decl->args) + " Bool)");
                declared_.emplace(g.predicate(), Declared{scope_depth(), std::nullopt});
            }
            bool ground = std::none_of(g.args().begin(), g.args().end(), [](const GroundTerm& a) { return mentions_bound(a); });
            if (ground && record(to_smtlib(g)))
                scopes_.back().predicate_atoms.push_back(g);
            break;
        }
        default:
            break;
        }
    });
}

void Session::assert_formula(const GroundFormula& f)
{
    last_sat_ = false;
    declare_symbols(f);
    expect_success("(assert " + to_smtlib(f) + ")");
}

void Session::push()
{
    last_sat_ = false;
    expect_success("(push 1)");
    scopes_.emplace_back();
}

void Session::pop()
{
    if (scope_depth() == 0)
        throw Error("pop without a matching push");
    last_sat_ = false;
    expect_success("(pop 1)");
    for (const auto& s : scopes_.back().symbols)
        declared_.erase(s);
    for (const auto& t : scopes_.back().applications)
        seen_apps_.erase(to_smtlib(t));
    for (const auto& a : scopes_.back().predicate_atoms)
        seen_apps_.erase(to_smtlib(a));
    scopes_.pop_back();
}

CheckResult Session::check()
{
    last_sat_ = false;
    ++checks_;
    send("(check-sat)");
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (cfg_.timeout_ms > 0)
        deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(cfg_.timeout_ms) + check_grace;
    else
        deadline = std::chrono::steady_clock::time_point::max();
    SExpr r;
    try {
        r = read_response(deadline);
    } catch (const BackendError& e) {
        if (process_ && process_->running() && std::string(e.what()) == "solver did not answer in time") {
            process_->terminate(std::chrono::milliseconds(0));
            dead_ = true;
            return {CheckStatus::Unknown, "timeout"};
        }
        throw;
    }
    if (r.is("sat")) {
        last_sat_ = true;
        return {CheckStatus::Sat, {}};
    }
    if (r.is("unsat"))
        return {CheckStatus::Unsat, {}};
    if (r.is("unknown")) {
        auto info = command("(get-info :reason-unknown)");
        std::string reason = "unknown";
        if (info.is_list && info.items.size() == 2) {
            reason = info.items[1].text;
            if (reason.size() >= 2 && reason.front() == '"' && reason.back() == '"')
                reason = reason.substr(1, reason.size() - 2);
        }
        if (reason.find("timeout") != std::string::npos || reason.find("canceled") != std::string::npos)
            reason = "timeout";
        return {CheckStatus::Unknown, reason};
    }
    auto msg = error_message(r);
    throw BackendError("solver error on (check-sat): " + (msg.empty() ? to_string(r) : msg));
}

bool Session::is_declared(const std::string& symbol) const { return declared_.contains(symbol); }

std::vector<SExpr> Session::get_values(const std::vector<std::string>& exprs)
{
    if (!last_sat_)
        throw Error("model query without a preceding sat check");
    if (exprs.empty())
        return {};
    auto r = command("(get-value (" + join(exprs) + "))");
    auto msg = error_message(r);
    if (!msg.empty())
        throw BackendError("solver error on get-value: " + msg);
    if (!r.is_list || r.items.size() != exprs.size())
        throw BackendError("malformed get-value answer: " + to_string(r));
    std::vector<SExpr> values;
    for (auto& pair : r.items) {
        if (!pair.is_list || pair.items.size() != 2)
            throw BackendError("malformed get-value entry: " + to_string(pair));
        values.push_back(std::move(pair.items[1]));
    }
    return values;
}

namespace {

Rational parse_number(const SExpr& e)
{
    if (e.is_atom()) {
        auto r = parse_rational(e.text);
        if (!r || e.text.front() == '-' || e.text.front() == '+')
            throw BackendError("unparseable model value " + e.text);
        return *r;
    }
    if (e.items.size() == 2 && e.items[0].is("-"))
        return -parse_number(e.items[1]);
    if (e.items.size() == 3 && e.items[0].is("/")) {
        Rational d = parse_number(e.items[2]);
        if (d == 0)
            throw BackendError("model value divides by zero: " + to_string(e));
        return parse_number(e.items[1]) / d;
    }
    throw BackendError("unparseable model value " + to_string(e));
}

} // namespace

Value Session::parse_model_value(const SExpr& e, const std::optional<Sort>& sort)
{
    if (!sort) {
        if (e.is("true") || e.is("false"))
            return Value::boolean(e.is("true"));
        throw BackendError("unparseable Boolean model value " + to_string(e));
    }
    switch (sort->kind()) {
    case Sort::Kind::Int: {
        Rational r = parse_number(e);
        if (r.get_den() != 1)
            throw BackendError("non-integral value " + to_string(e) + " for an Int term");
        return Value::number(r);
    }
    case Sort::Kind::Real:
        return Value::number(parse_number(e));
    case Sort::Kind::Uninterpreted: {
        const SExpr* name = &e;
        if (e.is_list && e.items.size() == 3 && e.items[0].is("as"))
            name = &e.items[1];
        if (!name->is_atom())
            throw BackendError("unparseable element value " + to_string(e));
        auto& ids = elements_[sort->name()];
        auto [it, fresh] = ids.emplace(name->symbol(), ids.size());
        return Value::element(sort->name(), it->second);
    }
    }
    throw InternalError("unhandled sort kind");
}

std::map<std::string, Value> Session::model_values(const std::vector<std::string>& symbols)
{
    std::vector<std::string> names;
    std::vector<std::string> exprs;
    for (const auto& s : symbols)
        if (declared_.contains(s)) {
            names.push_back(s);
            exprs.push_back(smt_symbol(s));
        }
    auto values = get_values(exprs);
    std::map<std::string, Value> out;
    for (std::size_t k = 0; k < names.size(); ++k)
        out.emplace(names[k], parse_model_value(values[k], declared_.at(names[k]).sort));
    return out;
}

std::vector<Value> Session::term_values(const std::vector<GroundTerm>& terms)
{
    std::vector<std::string> exprs;
    for (const auto& t : terms)
        exprs.push_back(to_smtlib(t));
    auto values = get_values(exprs);
    std::vector<Value> out;
    for (std::size_t k = 0; k < terms.size(); ++k)
        out.push_back(parse_model_value(values[k], sort_of(terms[k])));
    return out;
}

std::vector<bool> Session::formula_values(const std::vector<GroundFormula>& formulas)
{
    std::vector<std::string> exprs;
    for (const auto& f : formulas)
        exprs.push_back(to_smtlib(f));
    auto values = get_values(exprs);
    std::vector<bool> out;
    for (const auto& v : values)
        out.push_back(parse_model_value(v, std::nullopt).boolean());
    return out;
}

Interpretation Session::model_interpretation()
{
    Interpretation interp;

    std::vector<std::string> constants;
    for (const auto& [name, sort] : sig_.constants())
        if (declared_.contains(name))
            constants.push_back(name);
    for (const auto& [name, value] : model_values(constants))
        interp.set_constant(name, value);

    std::vector<GroundTerm> terms;
    std::vector<GroundFormula> atoms;
    for (const auto& scope : scopes_) {
        for (const auto& app : scope.applications) {
            terms.insert(terms.end(), app.args().begin(), app.args().end());
            terms.push_back(app);
        }
        for (const auto& atom : scope.predicate_atoms) {
            terms.insert(terms.end(), atom.args().begin(), atom.args().end());
            atoms.push_back(atom);
        }
    }
    auto values = term_values(terms);
    auto truths = formula_values(atoms);

    std::size_t pos = 0;
    for (const auto& scope : scopes_)
        for (const auto& app : scope.applications) {
            std::vector<Value> args(values.begin() + pos, values.begin() + pos + app.args().size());
            pos += app.args().size();
            interp.set_function(app.name(), std::move(args), values[pos++]);
        }
    std::size_t atom_index = 0;
    for (const auto& scope : scopes_)
        for (const auto& atom : scope.predicate_atoms) {
            std::vector<Value> args(values.begin() + pos, values.begin() + pos + atom.args().size());
            pos += atom.args().size();
            interp.set_predicate(atom.predicate(), std::move(args), truths[atom_index++]);
        }
    return interp;
}

} // namespace ltlfmt::smt
