#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltlfmt/closure.hpp"
#include "ltlfmt/encoder/encoder.hpp"
#include "ltlfmt/smt/session.hpp"
#include "ltlfmt/trace.hpp"

namespace ltlfmt {

/// A node label: sorted closure ids without duplicates.
using Label = std::vector<std::size_t>;

struct TableauOptions {
    /// Largest number of poised nodes on a branch; 0 means no bound.
    std::size_t max_poised = 301;
    smt::SolverConfig backend;
    /// When set, the last explored tree is written here in DOT format.
    std::string dot_path;
};

struct TableauResult {
    enum class Status { Sat, Unsat, Unknown } status = Status::Unknown;
    /// Poised nodes on the accepted branch minus one (Sat), or on the longest
    /// branch explored (Unsat, Unknown).
    std::size_t k = 0;
    std::optional<Trace> trace;
    std::string reason;
    std::size_t nodes = 0;
    std::size_t checks = 0;
};

/// The one-pass tree-shaped tableau over the closure of a formula.
class Tableau {
public:
    Tableau(const TemporalFormula& phi, const Signature& sig);

    const ClosureTable& closure() const { return table_; }
    Label root() const { return {0}; }

    bool is_poised(const Label& l) const;
    /// Applies the expansion rule to the first non-elementary member.
    std::vector<Label> expand(const Label& l) const;
    /// Children reached by expanding until every leaf is poised.
    std::vector<Label> saturate(const Label& l) const;
    /// {a : X a or wX a in l}.
    Label step(const Label& l) const;
    bool has_tomorrow(const Label& l) const;
    /// F(pi): the first-order members.
    std::vector<TemporalFormula> first_order(const Label& l) const;

    std::string to_string(const Label& l) const;

    /// Breadth-first search by number of poised nodes.
    TableauResult search(const TableauOptions& opts) const;

private:
    Label with(const Label& l, std::size_t removed, std::initializer_list<std::size_t> added) const;

    ClosureTable table_;
    Signature sig_;
};

} // namespace ltlfmt
