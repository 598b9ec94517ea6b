#include "ltlfmt/tableau.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "ltlfmt/errors.hpp"
#include "ltlfmt/model.hpp"
#include "ltlfmt/printer.hpp"
#include "ltlfmt/smt/logic.hpp"

namespace ltlfmt {

namespace {

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

class DotGraph {
public:
    std::size_t node(const std::string& label)
    {
        nodes_.push_back({label, {}});
        return nodes_.size() - 1;
    }
    void edge(std::size_t from, std::size_t to, const std::string& rule) { edges_.push_back({from, to, rule}); }
    void mark(std::size_t n, const std::string& status) { nodes_[n].status = status; }

    void write(const std::string& path) const
    {
        std::ofstream out(path);
        if (!out)
            throw Error("cannot write tableau dump " + path);
        out << "digraph tableau {\n  node [shape=box, fontname=\"monospace\"];\n";
        for (std::size_t n = 0; n < nodes_.size(); ++n) {
            out << "  n" << n << " [label=\"" << dot_escape(nodes_[n].label) << "\"";
            if (nodes_[n].status == "rejected")
                out << ", color=red";
            else if (nodes_[n].status == "accepted")
                out << ", color=green, penwidth=2";
            else if (nodes_[n].status == "poised")
                out << ", style=bold";
            out << "];\n";
        }
        for (const auto& e : edges_)
            out << "  n" << e.from << " -> n" << e.to << " [label=\"" << dot_escape(e.rule) << "\"];\n";
        out << "}\n";
    }

private:
    struct Node {
        std::string label;
        std::string status;
    };
    struct Edge {
        std::size_t from;
        std::size_t to;
        std::string rule;
    };
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
};

struct BackendUnknown {
    std::string reason;
};

} // namespace

Tableau::Tableau(const TemporalFormula& phi, const Signature& sig) : table_(phi), sig_(sig) {}

bool Tableau::is_poised(const Label& l) const
{
    return std::all_of(l.begin(), l.end(), [&](std::size_t id) { return table_[id].is_elementary(); });
}

bool Tableau::has_tomorrow(const Label& l) const
{
    return std::any_of(l.begin(), l.end(), [&](std::size_t id) { return table_[id].kind() == TemporalFormula::Kind::X; });
}

Label Tableau::with(const Label& l, std::size_t removed, std::initializer_list<std::size_t> added) const
{
    std::set<std::size_t> out(l.begin(), l.end());
    out.erase(removed);
    out.insert(added.begin(), added.end());
    return {out.begin(), out.end()};
}

std::vector<Label> Tableau::expand(const Label& l) const
{
    auto it = std::find_if(l.begin(), l.end(), [&](std::size_t id) { return !table_[id].is_elementary(); });
    if (it == l.end())
        return {};
    std::size_t id = *it;
    const auto& f = table_[id];
    auto sub = [&](const TemporalFormula& g) { return table_.id_of(g); };
    using K = TemporalFormula::Kind;
    switch (f.kind()) {
    case K::Or:
        return {with(l, id, {sub(f.lhs())}), with(l, id, {sub(f.rhs())})};
    case K::And:
        return {with(l, id, {sub(f.lhs()), sub(f.rhs())})};
    case K::U:
        return {with(l, id, {sub(f.rhs())}), with(l, id, {sub(f.lhs()), sub(TemporalFormula::tomorrow(f))})};
    case K::R:
        return {with(l, id, {sub(f.lhs()), sub(f.rhs())}), with(l, id, {sub(f.rhs()), sub(TemporalFormula::weak_tomorrow(f))})};
    default:
        break;
    }
    throw InternalError("expand on an elementary formula");
}

std::vector<Label> Tableau::saturate(const Label& l) const
{
    std::vector<Label> out;
    std::set<Label> seen;
    std::vector<Label> stack{l};
    while (!stack.empty()) {
        Label cur = std::move(stack.back());
        stack.pop_back();
        if (is_poised(cur)) {
            if (seen.insert(cur).second)
                out.push_back(std::move(cur));
            continue;
        }
        auto children = expand(cur);
        for (auto c = children.rbegin(); c != children.rend(); ++c)
            stack.push_back(std::move(*c));
    }
    return out;
}

Label Tableau::step(const Label& l) const
{
    std::set<std::size_t> out;
    for (auto id : l)
        if (table_[id].is_tomorrow())
            out.insert(table_.id_of(table_[id].operand()));
    return {out.begin(), out.end()};
}

std::vector<TemporalFormula> Tableau::first_order(const Label& l) const
{
    std::vector<TemporalFormula> out;
    for (auto id : l)
        if (table_[id].is_first_order())
            out.push_back(table_[id]);
    return out;
}

std::string Tableau::to_string(const Label& l) const
{
    std::string out = "{";
    for (std::size_t k = 0; k < l.size(); ++k)
        out += (k ? ", " : "") + ltlfmt::to_string(table_[l[k]]);
    return out + "}";
}

namespace {

const char* rule_name(const TemporalFormula& f)
{
    switch (f.kind()) {
    case TemporalFormula::Kind::Or:
        return "disjunction";
    case TemporalFormula::Kind::And:
        return "conjunction";
    case TemporalFormula::Kind::U:
        return "until";
    case TemporalFormula::Kind::R:
        return "release";
    default:
        return "?";
    }
}

class Search {
public:
    Search(const Tableau& t, const Signature& sig, smt::Session& session, std::size_t m, DotGraph* dot)
        : t_(t), sig_(sig), session_(session), m_(m), dot_(dot)
    {
    }

    void run()
    {
        std::optional<std::size_t> root_node;
        if (dot_)
            root_node = dot_->node(t_.to_string(t_.root()));
        for (const auto& [label, node] : poised_children(t_.root(), root_node)) {
            visit(label, 1, node);
            if (trace)
                return;
        }
    }

    bool alive = false;
    std::optional<Trace> trace;
    std::size_t nodes = 0;

private:
    using Traced = std::pair<Label, std::optional<std::size_t>>;

    // Expansion to poised labels, recording the intermediate tree.
    std::vector<Traced> poised_children(const Label& l, std::optional<std::size_t> node)
    {
        if (!dot_) {
            std::vector<Traced> out;
            for (auto& p : t_.saturate(l))
                out.push_back({std::move(p), std::nullopt});
            return out;
        }
        std::vector<Traced> out;
        std::set<Label> seen;
        expand_traced(l, *node, out, seen);
        return out;
    }

    void expand_traced(const Label& l, std::size_t node, std::vector<Traced>& out, std::set<Label>& seen)
    {
        if (t_.is_poised(l)) {
            if (seen.insert(l).second)
                out.push_back({l, node});
            return;
        }
        auto it = std::find_if(l.begin(), l.end(), [&](std::size_t id) { return !t_.closure()[id].is_elementary(); });
        std::string rule = rule_name(t_.closure()[*it]);
        for (const auto& child : t_.expand(l)) {
            std::size_t n = dot_->node(t_.to_string(child));
            dot_->edge(node, n, rule);
            expand_traced(child, n, out, seen);
        }
    }

    smt::CheckStatus check()
    {
        auto r = session_.check();
        if (r.status == smt::CheckStatus::Unknown)
            throw BackendUnknown{r.reason};
        return r.status;
    }

    void mark(std::optional<std::size_t> node, const std::string& status)
    {
        if (dot_ && node)
            dot_->mark(*node, status);
    }

    void visit(const Label& label, std::size_t depth, std::optional<std::size_t> node)
    {
        ++nodes;
        std::size_t i = depth - 1;
        // Omega grows by this node's first-order formulas at step i and by _l@(i-1).
        std::vector<GroundFormula> parts;
        for (const auto& f : t_.first_order(label)) {
            if (f.kind() == TemporalFormula::Kind::Fo)
                parts.push_back(label_L(f.fo(), i));
            else if (f.kind() == TemporalFormula::Kind::False)
                parts.push_back(GroundFormula::bottom());
        }
        if (i > 0)
            parts.push_back(GroundFormula::step_lit(i - 1));

        session_.push();
        session_.assert_formula(GroundFormula::conj(std::move(parts)));
        if (check() == smt::CheckStatus::Unsat) {
            mark(node, "rejected");
            session_.pop();
            return;
        }
        mark(node, "poised");
        if (depth == m_) {
            alive = true;
            if (!t_.has_tomorrow(label)) {
                session_.push();
                session_.assert_formula(GroundFormula::negation(GroundFormula::step_lit(i)));
                if (check() == smt::CheckStatus::Sat) {
                    mark(node, "accepted");
                    trace = extract_trace(session_, sig_, i);
                    session_.pop();
                    session_.pop();
                    return;
                }
                session_.pop();
            }
        } else {
            Label next = t_.step(label);
            std::optional<std::size_t> next_node;
            if (dot_) {
                next_node = dot_->node(t_.to_string(next));
                dot_->edge(*node, *next_node, "step");
            }
            for (const auto& [child, child_node] : poised_children(next, next_node)) {
                visit(child, depth + 1, child_node);
                if (trace)
                    break;
            }
        }
        session_.pop();
    }

    const Tableau& t_;
    const Signature& sig_;
    smt::Session& session_;
    std::size_t m_;
    DotGraph* dot_;
};

} // namespace

TableauResult Tableau::search(const TableauOptions& opts) const
{
    smt::SolverConfig cfg = opts.backend;
    if (cfg.logic.empty())
        cfg.logic = smt::infer_logic(table_.root(), sig_);
    smt::Session session(cfg, sig_);

    TableauResult result;
    for (std::size_t m = 1; opts.max_poised == 0 || m <= opts.max_poised; ++m) {
        DotGraph dot;
        Search search(*this, sig_, session, m, opts.dot_path.empty() ? nullptr : &dot);
        try {
            search.run();
        } catch (const BackendUnknown& u) {
            result.status = TableauResult::Status::Unknown;
            result.reason = u.reason == "timeout" ? "timeout" : "backend-unknown: " + u.reason;
            result.k = m - 1;
            result.checks = session.checks();
            if (!opts.dot_path.empty())
                dot.write(opts.dot_path);
            return result;
        }
        result.nodes += search.nodes;
        result.k = m - 1;
        bool last = opts.max_poised != 0 && m == opts.max_poised;
        if (search.trace || !search.alive || last) {
            if (!opts.dot_path.empty())
                dot.write(opts.dot_path);
        }
        if (search.trace) {
            result.status = TableauResult::Status::Sat;
            result.trace = std::move(search.trace);
            result.checks = session.checks();
            return result;
        }
        if (!search.alive) {
            result.status = TableauResult::Status::Unsat;
            result.checks = session.checks();
            return result;
        }
    }
    result.status = TableauResult::Status::Unknown;
    result.reason = "bound-exhausted";
    result.checks = session.checks();
    return result;
}

} // namespace ltlfmt
