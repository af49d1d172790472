#pragma once

#include <memory>
#include <vector>

#include "latder/bounded.hpp"
#include "latder/cover_poset.hpp"
#include "latder/lattice.hpp"

namespace latder {

/// Cov(L, γ): the connected component of γ in Cov(L) as a lattice. Element
/// ids follow the canonical cover order restricted to the component.
struct DerivedLattice {
    FiniteLattice lattice;
    std::vector<Cover> cover_of;
    std::shared_ptr<const FiniteLattice> base;
    Cover seed;
};

/// The component of γ as a bare poset, for bases where it need not be a
/// lattice.
struct ComponentPoset {
    FinitePoset poset;
    std::vector<Cover> cover_of;
};

ComponentPoset component_poset(const CoverPoset& covers, Cover seed);

/// Throws NotSemidistributiveError unless L is semidistributive and
/// InvalidCoverError unless γ is a cover.
DerivedLattice derived_lattice(const FiniteLattice& lattice, Cover seed);

/// Every stage of a repeated derivation; seeds address covers of the
/// current stage by element ids. Throws StageSelectorError when a seed is
/// not a cover of its stage.
std::vector<DerivedLattice> derivation_stages(const FiniteLattice& lattice,
                                              const std::vector<Cover>& seeds);

/// The last stage of derivation_stages, or L itself for no seeds.
FiniteLattice iterate_derive(const FiniteLattice& lattice, const std::vector<Cover>& seeds);

/// F(Γ) = f(u, Γ1,1) where Γ1 ⇘_u Γ0 in Cov(L), indexed by the covers of
/// the derived lattice. Throws NotBoundedError unless L is bounded and
/// LabellingInvalidError unless f is a strict facet labelling.
FacetLabelling lift_labelling(const FiniteLattice& lattice, const FacetLabelling& f, Cover seed);

/// The same labelling read through ⇗: F(Γ) = f(Γ0,0, w) where Γ0 ⇗_w Γ1.
FacetLabelling lift_labelling_pushup(const FiniteLattice& lattice, const FacetLabelling& f,
                                     Cover seed);

}  // namespace latder
