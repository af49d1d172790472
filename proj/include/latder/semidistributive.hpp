#pragma once

#include <array>
#include <utility>

#include "latder/cover_poset.hpp"
#include "latder/lattice.hpp"

namespace latder {

/// Exhaustive check of x ∨ y = x ∨ z ⇒ x ∨ (y ∧ z) = x ∨ y over all triples.
bool is_join_semidistributive_direct(const FiniteLattice& lattice);
/// The dual Horn law.
bool is_meet_semidistributive_direct(const FiniteLattice& lattice);
bool is_semidistributive(const FiniteLattice& lattice);
bool is_distributive(const FiniteLattice& lattice);

/// pr0 : Cov(L) -> L creates pullbacks: it is a Grothendieck fibration and
/// any γ, δ <= ε admit β <= γ, δ with β0 = γ0 ∧ δ0.
bool creates_pullbacks_pr0(const CoverPoset& covers);
bool creates_pullbacks_pr0(const FiniteLattice& lattice);

/// The unique j in J(L) with (j_*, j) <= γ, returned as (j, j_*).
/// Throws AmbiguityError (carrying all candidates) unless exactly one exists.
std::pair<Elem, Elem> unique_perspective_ji(const FiniteLattice& lattice, Cover gamma);

/// Every maximal element of Cov(L) has a least element below it.
bool unique_ji_per_max(const CoverPoset& covers);

struct SdReport {
    bool sd_join_direct = false;
    bool sd_meet_direct = false;
    bool creates_pullbacks = false;
    bool pushdown = false;
    bool pushup = false;
    /// (1) ⇘-steps are covers of Cov(L); (2) distinct pushers give
    /// incomparable bottoms; (3) hats of Cov(L) have pullbacks; (4) Cov(L)
    /// has pullbacks; (5) SD∨.
    std::array<bool, 5> pushjsemid{};
    bool unique_ji_per_max = false;

    /// Meaningful only when pushdown holds.
    bool conditions_agree() const noexcept;
};

SdReport sd_report(const CoverPoset& covers);
SdReport sd_report(const FiniteLattice& lattice);

}  // namespace latder
