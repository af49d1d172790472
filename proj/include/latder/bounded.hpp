#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latder/cover_poset.hpp"
#include "latder/lattice.hpp"

namespace latder {

/// j R k certified by the meet-irreducible `witness` (the least one found).
struct DependencyPair {
    Elem from = 0;
    Elem to = 0;
    Elem witness = 0;

    friend auto operator<=>(const DependencyPair&, const DependencyPair&) = default;
};

/// A relation over join-irreducibles, pairs sorted by (from, to).
struct DependencyRelation {
    std::vector<DependencyPair> pairs;

    bool contains(Elem from, Elem to) const;
    std::size_t size() const noexcept { return pairs.size(); }
};

/// The join-dependency relation D and its refinements A, B, C = A ∪ B,
/// all read off the arrow relations.
struct JoinDependency {
    std::vector<Elem> join_irreducibles;
    DependencyRelation D;
    DependencyRelation A;
    DependencyRelation B;
    DependencyRelation C;
};

JoinDependency join_dependency(const FiniteLattice& lattice);

/// Cycle test by strongly connected components.
bool has_cycle(const DependencyRelation& relation, std::size_t universe);

bool is_lower_bounded(const FiniteLattice& lattice);
bool is_upper_bounded(const FiniteLattice& lattice);
bool is_bounded(const FiniteLattice& lattice);

/// γ 𝒜 δ (resp. γ ℬ δ) witnessed by ε ⇘_along δ (resp. ε ⇗_along δ).
/// `from` is γ and `to` is δ, both cover indices.
struct CoverDependencyPair {
    CoverIndex from = 0;
    CoverIndex to = 0;
    CoverIndex epsilon = 0;
    Elem along = 0;

    friend auto operator<=>(const CoverDependencyPair&, const CoverDependencyPair&) = default;
};

/// 𝒜: ε ⇘_u δ and δ1 <= γ0 ⋖ γ1 <= u.
/// ℬ: ε ⇗_w δ and w <= γ0 ⋖ γ1 <= δ0.
struct CoverDependency {
    std::vector<CoverDependencyPair> calA;
    std::vector<CoverDependencyPair> calB;
};

CoverDependency cover_dependency(const CoverPoset& covers);
CoverDependency cover_dependency(const FiniteLattice& lattice);

/// Labels indexed by the canonical cover order of the lattice.
struct FacetLabelling {
    std::vector<std::uint32_t> labels;

    friend bool operator==(const FacetLabelling&, const FacetLabelling&) = default;
};

enum class LabelClause { pushdown_equal, calA_strict, pushup_equal, calB_strict };

std::string to_string(LabelClause clause);

/// A violated clause between the covers `from` and `to`: for the equality
/// clauses from ⇘ to (resp. from ⇗ to); for the strict clauses from 𝒜 to
/// (resp. from ℬ to), requiring f(to) < f(from).
struct LabelViolation {
    LabelClause clause = LabelClause::pushdown_equal;
    CoverIndex from = 0;
    CoverIndex to = 0;

    friend bool operator==(const LabelViolation&, const LabelViolation&) = default;
};

struct LabellingCheck {
    bool lower = false;
    bool upper = false;
    std::vector<LabelViolation> violations;

    bool ok() const noexcept { return lower && upper; }
};

/// Evaluates all four clauses. Throws PartialLabellingError unless f has
/// exactly one label per cover.
LabellingCheck verify_strict_facet_labelling(const CoverPoset& covers, const FacetLabelling& f);
LabellingCheck verify_strict_facet_labelling(const FiniteLattice& lattice, const FacetLabelling& f);

/// f(δ) = g(j(δ)) with g(j) the length of the longest D-path from j.
/// nullopt unless L is join-semidistributive with acyclic D.
std::optional<FacetLabelling> construct_strict_facet_labelling(const FiniteLattice& lattice);

/// The pointwise least strict facet labelling, solved directly from the
/// clauses (equalities merged, strict edges topologically layered);
/// nullopt when the clauses are contradictory.
std::optional<FacetLabelling> find_strict_facet_labelling(const CoverPoset& covers);
std::optional<FacetLabelling> find_strict_facet_labelling(const FiniteLattice& lattice);

/// (δ, δ', γ, γ') with δ1 = δ'1, γ0 = γ'0, δ ⇘_{δ'0} γ and δ' ⇘_{δ0} γ'.
struct Facet {
    Cover delta;
    Cover delta_p;
    Cover gamma;
    Cover gamma_p;
    /// Covers ε with γ1 <= ε0 ⋖ ε1 <= δ'0 or γ'1 <= ε0 ⋖ ε1 <= δ0.
    std::vector<Cover> interiors;
};

/// One facet per unordered {δ, δ'}, with δ of smaller cover index.
std::vector<Facet> facets(const FiniteLattice& lattice);

/// f(δ) = f(γ), f(δ') = f(γ') on every facet and all four labels below
/// f(ε) for every interior ε. Throws NotSemidistributiveError unless L is
/// semidistributive, PartialLabellingError on a wrong-sized labelling.
bool verify_facet_form(const FiniteLattice& lattice, const FacetLabelling& f);

/// j(δ) for every cover: the unique join-irreducible with (j_*, j) <= δ.
/// Throws AmbiguityError when some cover has zero or several.
std::vector<Elem> perspective_join_irreducibles(const CoverPoset& covers);

}  // namespace latder
