#include "latder/semidistributive.hpp"

#include <algorithm>
#include <string>

#include "latder/errors.hpp"

namespace latder {

bool is_join_semidistributive_direct(const FiniteLattice& lattice) {
    const auto n = static_cast<Elem>(lattice.size());
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            const Elem xy = lattice.join(x, y);
            for (Elem z = 0; z < n; ++z) {
                if (lattice.join(x, z) == xy && lattice.join(x, lattice.meet(y, z)) != xy) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_meet_semidistributive_direct(const FiniteLattice& lattice) {
    const auto n = static_cast<Elem>(lattice.size());
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            const Elem xy = lattice.meet(x, y);
            for (Elem z = 0; z < n; ++z) {
                if (lattice.meet(x, z) == xy && lattice.meet(x, lattice.join(y, z)) != xy) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_semidistributive(const FiniteLattice& lattice) {
    return is_join_semidistributive_direct(lattice) && is_meet_semidistributive_direct(lattice);
}

bool is_distributive(const FiniteLattice& lattice) {
    const auto n = static_cast<Elem>(lattice.size());
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            for (Elem z = 0; z < n; ++z) {
                if (lattice.meet(x, lattice.join(y, z)) !=
                    lattice.join(lattice.meet(x, y), lattice.meet(x, z))) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool creates_pullbacks_pr0(const CoverPoset& cp) {
    if (!is_pushdown(cp)) {
        return false;
    }
    const FiniteLattice& lat = cp.base();
    const FinitePoset& order = cp.poset();
    for (CoverIndex e = 0; e < cp.size(); ++e) {
        const auto below = order.down(static_cast<Elem>(e)).to_vector();
        for (std::size_t a = 0; a < below.size(); ++a) {
            for (std::size_t b = a + 1; b < below.size(); ++b) {
                const Elem target = lat.meet(cp.cover(below[a]).lo, cp.cover(below[b]).lo);
                const BitSet common = order.down(static_cast<Elem>(below[a])) &
                                      order.down(static_cast<Elem>(below[b]));
                bool found = false;
                common.for_each([&](std::size_t beta) {
                    found = found || cp.cover(beta).lo == target;
                });
                if (!found) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool creates_pullbacks_pr0(const FiniteLattice& lattice) {
    return creates_pullbacks_pr0(cover_poset(lattice));
}

std::pair<Elem, Elem> unique_perspective_ji(const FiniteLattice& lattice, Cover gamma) {
    check_cover(lattice, gamma);
    const Irreducibles irr(lattice);
    std::vector<Elem> candidates;
    for (const auto& [j, j_star] : irr.join_irreducibles()) {
        if (cover_leq(lattice, {j_star, j}, gamma)) {
            candidates.push_back(j);
        }
    }
    if (candidates.size() != 1) {
        throw AmbiguityError("cover (" + std::to_string(gamma.lo) + "," +
                                 std::to_string(gamma.hi) + ") has " +
                                 std::to_string(candidates.size()) +
                                 " perspective join-irreducibles",
                             candidates);
    }
    return {candidates.front(), irr.lower_star(candidates.front())};
}

bool unique_ji_per_max(const CoverPoset& cp) {
    const FinitePoset& order = cp.poset();
    for (Elem mu = 0; mu < order.size(); ++mu) {
        if (!order.upper_covers(mu).empty()) {
            continue;
        }
        const BitSet ideal = order.down(mu);
        bool has_least = false;
        ideal.for_each([&](std::size_t x) {
            has_least = has_least || ideal.is_subset_of(order.up(static_cast<Elem>(x)));
        });
        if (!has_least) {
            return false;
        }
    }
    return true;
}

bool SdReport::conditions_agree() const noexcept {
    return std::all_of(pushjsemid.begin(), pushjsemid.end(),
                       [&](bool b) { return b == pushjsemid.front(); });
}

namespace {

bool steps_are_covers(const CoverPoset& cp) {
    const FinitePoset& order = cp.poset();
    for (const auto& step : pushdown_relation(cp.base())) {
        const auto from = static_cast<Elem>(cp.require_index(step.from));
        const auto to = static_cast<Elem>(cp.require_index(step.to));
        if (!order.is_cover(to, from)) {
            return false;
        }
    }
    return true;
}

bool distinct_pushers_incomparable(const CoverPoset& cp) {
    const FiniteLattice& lat = cp.base();
    for (const Cover& delta : cp.covers()) {
        const auto& lows = lat.lower_covers(delta.hi);
        for (Elem u : lows) {
            for (Elem v : lows) {
                if (u == v || u == delta.lo || v == delta.lo) {
                    continue;
                }
                for (const Cover& g : pushdown_steps(lat, delta, u)) {
                    for (const Cover& e : pushdown_steps(lat, delta, v)) {
                        if (lat.leq(g.lo, e.lo) || lat.leq(e.lo, g.lo)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

SdReport sd_report(const CoverPoset& cp) {
    const FiniteLattice& lat = cp.base();
    SdReport r;
    r.sd_join_direct = is_join_semidistributive_direct(lat);
    r.sd_meet_direct = is_meet_semidistributive_direct(lat);
    r.creates_pullbacks = creates_pullbacks_pr0(cp);
    r.pushdown = is_pushdown(cp);
    r.pushup = is_pushup(cp);
    r.pushjsemid[0] = steps_are_covers(cp);
    r.pushjsemid[1] = distinct_pushers_incomparable(cp);
    r.pushjsemid[2] = has_pullbacks(cp.poset(), PullbackMode::hats_only);
    r.pushjsemid[3] = has_pullbacks(cp.poset(), PullbackMode::all_cospans);
    r.pushjsemid[4] = r.sd_join_direct;
    r.unique_ji_per_max = unique_ji_per_max(cp);
    return r;
}

SdReport sd_report(const FiniteLattice& lattice) {
    return sd_report(cover_poset(lattice));
}

}  // namespace latder
