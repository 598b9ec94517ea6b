#pragma once

#include <unordered_map>
#include <vector>

#include "ltlfmt/closure.hpp"
#include "ltlfmt/encoder/ground.hpp"
#include "ltlfmt/formula.hpp"

namespace ltlfmt {

/// t^i: state variables become `x@i`, next(x) and wnext(x) become
/// `x@(i+1)`, everything else is kept. Nested next(t) steps t at i+1.
GroundTerm step_term(const Term& t, std::size_t i);

/// (L_i(f))^i: strong atoms a become `_l@i & a`, weak ones `_l@i => a`,
/// rigid ones stay; the result is stepped at i.
GroundFormula label_L(const FoFormula& f, std::size_t i);

/// Stepped normal form. Until and release are unfolded one step,
/// X and wX subformulas and first-order leaves are left as they are; the
/// L_i labelling of the leaves happens in ground().
TemporalFormula snf(const TemporalFormula& f);

/// psi^i_G: first-order leaves labelled and stepped at i, every X/wX
/// subformula replaced by its grounded symbol `_g@<closure id>@<i>`.
GroundFormula ground(const TemporalFormula& psi, std::size_t i, const ClosureTable& ct);

/// First-order members of the poised labels F(pi_0), ..., F(pi_{m-1}).
struct BranchSummary {
    std::vector<std::vector<TemporalFormula>> poised_labels;
};

/// Omega(beta) = AND_i AND_{psi in F(pi_i)} (L_i(psi))^i  AND  _l@0 ... _l@(m-2).
GroundFormula omega(const BranchSummary& b);

/// The k-unraveling of one formula, produced incrementally.
class Encoder {
public:
    explicit Encoder(const TemporalFormula& phi);

    const TemporalFormula& formula() const { return table_.root(); }
    const ClosureTable& closure() const { return table_; }

    /// [[phi]]_0.
    GroundFormula unravel_base() const;
    /// The conjuncts taking [[phi]]_k to [[phi]]_{k+1}:
    /// _l@k, and for every X a / wX a in the closure
    /// `_g@<id>@k = snf(a)^{k+1}_G`.
    GroundFormula unravel_delta(std::size_t k) const;
    /// The conjuncts |phi|_k adds to [[phi]]_k: `not _g@<id>@k` for X
    /// requests, and `not _l@k`.
    GroundFormula empty_encoding(std::size_t k) const;
    /// [[phi]]_k in full.
    GroundFormula unravel(std::size_t k) const;

private:
    const TemporalFormula& snf_of(std::size_t id) const;

    ClosureTable table_;
    std::vector<TemporalFormula> snf_;
};

} // namespace ltlfmt
