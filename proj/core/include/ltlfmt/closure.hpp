#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ltlfmt/formula.hpp"

namespace ltlfmt {

/// closure(phi) with stable integer ids, deduplicated by structural equality.
///
/// Contains every subformula of phi, plus X(a U b) for each a U b and
/// wX(a R b) for each a R b. xr()/wxr() index the tomorrow and weak tomorrow
/// members.
class ClosureTable {
public:
    explicit ClosureTable(const TemporalFormula& root);

    const TemporalFormula& root() const { return entries_.front(); }
    std::size_t size() const { return entries_.size(); }
    const TemporalFormula& operator[](std::size_t id) const { return entries_[id]; }
    const std::vector<TemporalFormula>& entries() const { return entries_; }

    std::optional<std::size_t> find(const TemporalFormula& f) const;
    /// Like find(), but a missing formula is an InternalError.
    std::size_t id_of(const TemporalFormula& f) const;

    const std::vector<std::size_t>& xr() const { return xr_; }
    const std::vector<std::size_t>& wxr() const { return wxr_; }

private:
    std::size_t add(const TemporalFormula& f);
    void visit(const TemporalFormula& f);

    std::vector<TemporalFormula> entries_;
    std::unordered_map<TemporalFormula, std::size_t, TemporalFormulaHash> index_;
    std::vector<std::size_t> xr_;
    std::vector<std::size_t> wxr_;
};

inline ClosureTable closure(const TemporalFormula& f) { return ClosureTable(f); }

/// Number of distinct subformulas, counting structurally equal ones once.
std::size_t count_subformulas(const TemporalFormula& f);

enum class AtomStrength { Strong, Weak, Rigid };

/// Strong if some next(.) term occurs, weak if only wnext(.) terms occur,
/// rigid otherwise.
AtomStrength classify_atom(const Atom& a);

} // namespace ltlfmt
