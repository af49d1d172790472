#include "latder/derived.hpp"

#include <string>

#include "latder/errors.hpp"
#include "latder/semidistributive.hpp"

namespace latder {

namespace {

std::string show(Cover c) {
    return "(" + std::to_string(c.lo) + "," + std::to_string(c.hi) + ")";
}

DerivedLattice derive_unchecked(std::shared_ptr<const FiniteLattice> base, Cover seed) {
    const CoverPoset cp(base);
    ComponentPoset comp = component_poset(cp, seed);
    DerivedLattice out;
    out.lattice = FiniteLattice::from_poset(std::move(comp.poset));
    out.cover_of = std::move(comp.cover_of);
    out.base = std::move(base);
    out.seed = seed;
    return out;
}

void require_sd(const FiniteLattice& lattice) {
    if (!is_semidistributive(lattice)) {
        throw NotSemidistributiveError("derived lattices require a semidistributive base");
    }
}

void require_lift_preconditions(const CoverPoset& cp, const FacetLabelling& f) {
    if (!is_bounded(cp.base())) {
        throw NotBoundedError("lifting a labelling requires a bounded lattice");
    }
    if (!verify_strict_facet_labelling(cp, f).ok()) {
        throw LabellingInvalidError("the labelling is not a strict facet labelling");
    }
}

}  // namespace

ComponentPoset component_poset(const CoverPoset& cp, Cover seed) {
    const CoverIndex s = cp.require_index(seed);
    const CoverComponents comps = cover_components(cp);
    const auto& part = comps.parts[comps.component_of[s]];
    std::vector<Elem> members(part.begin(), part.end());
    ComponentPoset out;
    for (CoverIndex i : part) {
        out.cover_of.push_back(cp.cover(i));
    }
    // The cover poset carries "(lo,hi)" names, which induced() keeps.
    out.poset = cp.poset().induced(members);
    return out;
}

DerivedLattice derived_lattice(const FiniteLattice& lattice, Cover seed) {
    check_cover(lattice, seed);
    require_sd(lattice);
    return derive_unchecked(std::make_shared<const FiniteLattice>(lattice), seed);
}

std::vector<DerivedLattice> derivation_stages(const FiniteLattice& lattice,
                                              const std::vector<Cover>& seeds) {
    std::vector<DerivedLattice> stages;
    auto current = std::make_shared<const FiniteLattice>(lattice);
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const Cover seed = seeds[i];
        if (seed.lo >= current->size() || seed.hi >= current->size() ||
            !current->is_cover(seed.lo, seed.hi)) {
            throw StageSelectorError("stage " + std::to_string(i) + ": " + show(seed) +
                                     " is not a cover");
        }
        require_sd(*current);
        stages.push_back(derive_unchecked(current, seed));
        current = std::make_shared<const FiniteLattice>(stages.back().lattice);
    }
    return stages;
}

FiniteLattice iterate_derive(const FiniteLattice& lattice, const std::vector<Cover>& seeds) {
    auto stages = derivation_stages(lattice, seeds);
    return stages.empty() ? lattice : std::move(stages.back().lattice);
}

FacetLabelling lift_labelling(const FiniteLattice& lattice, const FacetLabelling& f, Cover seed) {
    const CoverPoset cp = cover_poset(lattice);
    require_lift_preconditions(cp, f);
    const DerivedLattice d = derived_lattice(lattice, seed);
    FacetLabelling out;
    for (const Edge& e : d.lattice.hasse()) {
        const Cover lower = d.cover_of[e.lo];
        const Cover upper = d.cover_of[e.hi];
        std::vector<Elem> pushers;
        for (Elem u : lattice.lower_covers(upper.hi)) {
            if (u == upper.lo) {
                continue;
            }
            for (const Cover& g : pushdown_steps(lattice, upper, u)) {
                if (g == lower) {
                    pushers.push_back(u);
                }
            }
        }
        if (pushers.size() != 1) {
            throw AmbiguityError("cover " + show(upper) + " > " + show(lower) + " has " +
                                     std::to_string(pushers.size()) + " pushers",
                                 pushers);
        }
        out.labels.push_back(f.labels[cp.require_index({pushers.front(), upper.hi})]);
    }
    return out;
}

FacetLabelling lift_labelling_pushup(const FiniteLattice& lattice, const FacetLabelling& f,
                                     Cover seed) {
    const CoverPoset cp = cover_poset(lattice);
    require_lift_preconditions(cp, f);
    const DerivedLattice d = derived_lattice(lattice, seed);
    FacetLabelling out;
    for (const Edge& e : d.lattice.hasse()) {
        const Cover lower = d.cover_of[e.lo];
        const Cover upper = d.cover_of[e.hi];
        std::vector<Elem> pushers;
        for (Elem w : lattice.upper_covers(lower.lo)) {
            if (w == lower.hi) {
                continue;
            }
            for (const Cover& g : pushup_steps(lattice, lower, w)) {
                if (g == upper) {
                    pushers.push_back(w);
                }
            }
        }
        if (pushers.size() != 1) {
            throw AmbiguityError("cover " + show(lower) + " < " + show(upper) + " has " +
                                     std::to_string(pushers.size()) + " pushers",
                                 pushers);
        }
        out.labels.push_back(f.labels[cp.require_index({lower.lo, pushers.front()})]);
    }
    return out;
}

}  // namespace latder
