#pragma once

#include <optional>
#include <vector>

#include "latder/cover_poset.hpp"
#include "latder/lattice.hpp"
#include "latder/poset.hpp"

namespace latder {

struct IsoResult {
    bool found = false;
    /// mapping[x] is the image in Q of x in P.
    std::optional<std::vector<Elem>> mapping;
};

/// Order isomorphism test: joint colour refinement on both posets, then
/// backtracking over colour-compatible candidates in ascending id order.
IsoResult are_isomorphic(const FinitePoset& p, const FinitePoset& q);
IsoResult are_isomorphic(const FiniteLattice& p, const FiniteLattice& q);

/// True iff `mapping` is a bijection carrying the order of P onto Q's.
bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q,
                          const std::vector<Elem>& mapping);

struct AtomSummary {
    Cover atomic_cover;
    std::size_t size = 0;
    std::size_t covers = 0;
    std::size_t height = 0;
    /// Atoms with equal iso_class have isomorphic derived lattices; classes
    /// are numbered in order of first appearance.
    std::size_t iso_class = 0;
};

struct RegularityReport {
    bool regular = true;
    std::vector<AtomSummary> atoms;
    /// Two atomic covers with non-isomorphic derived lattices, if any.
    std::optional<std::pair<Cover, Cover>> witness;
};

/// Derives at every atomic cover (⊥, a) and compares the results.
/// Throws NotSemidistributiveError unless L is semidistributive.
RegularityReport is_regular(const FiniteLattice& lattice);

}  // namespace latder
