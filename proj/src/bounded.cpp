#include "latder/bounded.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>

#include "latder/errors.hpp"
#include "latder/semidistributive.hpp"

namespace latder {

bool DependencyRelation::contains(Elem from, Elem to) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), DependencyPair{from, to, 0},
                               [](const DependencyPair& a, const DependencyPair& b) {
                                   return std::tie(a.from, a.to) < std::tie(b.from, b.to);
                               });
    return it != pairs.end() && it->from == from && it->to == to;
}

JoinDependency join_dependency(const FiniteLattice& lattice) {
    const Irreducibles irr(lattice);
    JoinDependency out;
    for (const auto& p : irr.join_irreducibles()) {
        out.join_irreducibles.push_back(p.element);
    }
    const auto& js = out.join_irreducibles;
    // Meet-irreducibles ascend, so the first witness recorded is the least.
    auto add = [](DependencyRelation& rel, Elem j, Elem k, Elem m) {
        if (!rel.contains(j, k)) {
            auto it = std::lower_bound(rel.pairs.begin(), rel.pairs.end(), DependencyPair{j, k, 0});
            rel.pairs.insert(it, {j, k, m});
        }
    };
    for (const auto& mp : irr.meet_irreducibles()) {
        const Elem m = mp.element;
        for (Elem j : js) {
            const Arrow aj = arrows(lattice, irr, j, m);
            for (Elem k : js) {
                if (j == k) {
                    continue;
                }
                const Arrow ak = arrows(lattice, irr, k, m);
                if (has_up(aj) && has_down(ak)) {
                    add(out.D, j, k, m);
                }
                if (has_up(aj) && ak == Arrow::both) {
                    add(out.A, j, k, m);
                    add(out.C, j, k, m);
                }
                if (aj == Arrow::both && has_down(ak)) {
                    add(out.B, j, k, m);
                    add(out.C, j, k, m);
                }
            }
        }
    }
    return out;
}

bool has_cycle(const DependencyRelation& relation, std::size_t universe) {
    std::vector<std::vector<Elem>> succ(universe);
    for (const auto& p : relation.pairs) {
        if (p.from == p.to) {
            return true;
        }
        succ.at(p.from).push_back(p.to);
    }
    // Tarjan; a cycle exists iff some component has two or more nodes.
    std::vector<int> index(universe, -1);
    std::vector<int> low(universe, 0);
    std::vector<bool> on_stack(universe, false);
    std::vector<Elem> stack;
    int counter = 0;
    bool cyclic = false;
    std::function<void(Elem)> visit = [&](Elem v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (Elem w : succ[v]) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::size_t members = 0;
            Elem w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                ++members;
            } while (w != v);
            cyclic = cyclic || members > 1;
        }
    };
    for (Elem v = 0; v < universe; ++v) {
        if (index[v] < 0) {
            visit(v);
        }
    }
    return cyclic;
}

bool is_lower_bounded(const FiniteLattice& lattice) {
    return !has_cycle(join_dependency(lattice).D, lattice.size());
}

bool is_upper_bounded(const FiniteLattice& lattice) {
    return is_lower_bounded(dualize(lattice));
}

bool is_bounded(const FiniteLattice& lattice) {
    return is_lower_bounded(lattice) && is_upper_bounded(lattice);
}

namespace {

void insert_unique(std::vector<CoverDependencyPair>& rel, CoverDependencyPair p) {
    auto key_less = [](const CoverDependencyPair& a, const CoverDependencyPair& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    };
    auto it = std::lower_bound(rel.begin(), rel.end(), p, key_less);
    if (it == rel.end() || it->from != p.from || it->to != p.to) {
        rel.insert(it, p);
    }
}

}  // namespace

CoverDependency cover_dependency(const CoverPoset& cp) {
    const FiniteLattice& lat = cp.base();
    CoverDependency out;
    for (const auto& step : pushdown_relation(lat)) {
        const CoverIndex eps = cp.require_index(step.from);
        const CoverIndex delta = cp.require_index(step.to);
        for (CoverIndex g = 0; g < cp.size(); ++g) {
            const Cover& gamma = cp.cover(g);
            if (lat.leq(step.to.hi, gamma.lo) && lat.leq(gamma.hi, step.along)) {
                insert_unique(out.calA, {g, delta, eps, step.along});
            }
        }
    }
    for (const auto& step : pushup_relation(lat)) {
        const CoverIndex eps = cp.require_index(step.from);
        const CoverIndex delta = cp.require_index(step.to);
        for (CoverIndex g = 0; g < cp.size(); ++g) {
            const Cover& gamma = cp.cover(g);
            if (lat.leq(step.along, gamma.lo) && lat.leq(gamma.hi, step.to.lo)) {
                insert_unique(out.calB, {g, delta, eps, step.along});
            }
        }
    }
    return out;
}

CoverDependency cover_dependency(const FiniteLattice& lattice) {
    return cover_dependency(cover_poset(lattice));
}

std::string to_string(LabelClause clause) {
    switch (clause) {
        case LabelClause::pushdown_equal: return "pushdown-equal";
        case LabelClause::calA_strict: return "A-strict";
        case LabelClause::pushup_equal: return "pushup-equal";
        case LabelClause::calB_strict: return "B-strict";
    }
    return "unknown";
}

namespace {

void require_total(const CoverPoset& cp, const FacetLabelling& f) {
    if (f.labels.size() != cp.size()) {
        throw PartialLabellingError("labelling has " + std::to_string(f.labels.size()) +
                                    " entries for " + std::to_string(cp.size()) + " covers");
    }
}

}  // namespace

LabellingCheck verify_strict_facet_labelling(const CoverPoset& cp, const FacetLabelling& f) {
    require_total(cp, f);
    const FiniteLattice& lat = cp.base();
    const auto& lab = f.labels;
    LabellingCheck out;
    out.lower = true;
    out.upper = true;
    for (const auto& step : pushdown_relation(lat)) {
        const auto a = cp.require_index(step.from);
        const auto b = cp.require_index(step.to);
        if (lab[a] != lab[b]) {
            out.lower = false;
            out.violations.push_back({LabelClause::pushdown_equal, a, b});
        }
    }
    const CoverDependency dep = cover_dependency(cp);
    for (const auto& p : dep.calA) {
        if (!(lab[p.to] < lab[p.from])) {
            out.lower = false;
            out.violations.push_back({LabelClause::calA_strict, p.from, p.to});
        }
    }
    for (const auto& step : pushup_relation(lat)) {
        const auto a = cp.require_index(step.from);
        const auto b = cp.require_index(step.to);
        if (lab[a] != lab[b]) {
            out.upper = false;
            out.violations.push_back({LabelClause::pushup_equal, a, b});
        }
    }
    for (const auto& p : dep.calB) {
        if (!(lab[p.to] < lab[p.from])) {
            out.upper = false;
            out.violations.push_back({LabelClause::calB_strict, p.from, p.to});
        }
    }
    return out;
}

LabellingCheck verify_strict_facet_labelling(const FiniteLattice& lattice,
                                             const FacetLabelling& f) {
    return verify_strict_facet_labelling(cover_poset(lattice), f);
}

std::vector<Elem> perspective_join_irreducibles(const CoverPoset& cp) {
    std::vector<Elem> out;
    out.reserve(cp.size());
    for (const Cover& c : cp.covers()) {
        out.push_back(unique_perspective_ji(cp.base(), c).first);
    }
    return out;
}

std::optional<FacetLabelling> construct_strict_facet_labelling(const FiniteLattice& lattice) {
    if (!is_join_semidistributive_direct(lattice)) {
        return std::nullopt;
    }
    const JoinDependency dep = join_dependency(lattice);
    const std::size_t n = lattice.size();
    if (has_cycle(dep.D, n)) {
        return std::nullopt;
    }
    std::vector<std::vector<Elem>> succ(n);
    for (const auto& p : dep.D.pairs) {
        succ[p.from].push_back(p.to);
    }
    // g(j): longest outgoing D-path, so x D y gives g(y) < g(x).
    std::vector<int> g(n, -1);
    std::function<int(Elem)> longest = [&](Elem j) {
        if (g[j] >= 0) {
            return g[j];
        }
        int best = 0;
        for (Elem k : succ[j]) {
            best = std::max(best, longest(k) + 1);
        }
        return g[j] = best;
    };
    const CoverPoset cp = cover_poset(lattice);
    FacetLabelling f;
    for (Elem j : perspective_join_irreducibles(cp)) {
        f.labels.push_back(static_cast<std::uint32_t>(longest(j)));
    }
    return f;
}

std::optional<FacetLabelling> find_strict_facet_labelling(const CoverPoset& cp) {
    const std::size_t m = cp.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    };
    const FiniteLattice& lat = cp.base();
    for (const auto& step : pushdown_relation(lat)) {
        unite(cp.require_index(step.from), cp.require_index(step.to));
    }
    for (const auto& step : pushup_relation(lat)) {
        unite(cp.require_index(step.from), cp.require_index(step.to));
    }
    // below[c]: classes whose label must be strictly smaller than c's.
    std::vector<std::vector<std::size_t>> below(m);
    const CoverDependency dep = cover_dependency(cp);
    for (const auto* rel : {&dep.calA, &dep.calB}) {
        for (const auto& p : *rel) {
            const auto hi = find(p.from);
            const auto lo = find(p.to);
            if (hi == lo) {
                return std::nullopt;
            }
            below[hi].push_back(lo);
        }
    }
    enum class Mark { fresh, active, done };
    std::vector<Mark> mark(m, Mark::fresh);
    std::vector<std::uint32_t> level(m, 0);
    bool cyclic = false;
    std::function<void(std::size_t)> visit = [&](std::size_t c) {
        mark[c] = Mark::active;
        for (std::size_t d : below[c]) {
            if (mark[d] == Mark::active) {
                cyclic = true;
            } else if (mark[d] == Mark::fresh) {
                visit(d);
            }
            level[c] = std::max(level[c], level[d] + 1);
        }
        mark[c] = Mark::done;
    };
    for (std::size_t c = 0; c < m && !cyclic; ++c) {
        if (find(c) == c && mark[c] == Mark::fresh) {
            visit(c);
        }
    }
    if (cyclic) {
        return std::nullopt;
    }
    FacetLabelling f;
    for (std::size_t c = 0; c < m; ++c) {
        f.labels.push_back(level[find(c)]);
    }
    return f;
}

std::optional<FacetLabelling> find_strict_facet_labelling(const FiniteLattice& lattice) {
    return find_strict_facet_labelling(cover_poset(lattice));
}

namespace {

std::vector<Facet> facets_of(const CoverPoset& cp) {
    const FiniteLattice& lat = cp.base();
    std::vector<Facet> out;
    for (CoverIndex a = 0; a < cp.size(); ++a) {
        for (CoverIndex b = a + 1; b < cp.size(); ++b) {
            const Cover& d = cp.cover(a);
            const Cover& dp = cp.cover(b);
            if (d.hi != dp.hi) {
                continue;
            }
            for (const Cover& g : pushdown_steps(lat, d, dp.lo)) {
                for (const Cover& gp : pushdown_steps(lat, dp, d.lo)) {
                    if (g.lo != gp.lo || g == gp || g == d || g == dp || gp == d || gp == dp) {
                        continue;
                    }
                    Facet f{d, dp, g, gp, {}};
                    for (const Cover& e : cp.covers()) {
                        const bool left = lat.leq(g.hi, e.lo) && lat.leq(e.hi, dp.lo);
                        const bool right = lat.leq(gp.hi, e.lo) && lat.leq(e.hi, d.lo);
                        if (left || right) {
                            f.interiors.push_back(e);
                        }
                    }
                    out.push_back(std::move(f));
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Facet> facets(const FiniteLattice& lattice) {
    return facets_of(cover_poset(lattice));
}

bool verify_facet_form(const FiniteLattice& lattice, const FacetLabelling& f) {
    if (!is_semidistributive(lattice)) {
        throw NotSemidistributiveError("facet form requires a semidistributive lattice");
    }
    const CoverPoset cp = cover_poset(lattice);
    require_total(cp, f);
    auto lab = [&](const Cover& c) { return f.labels[cp.require_index(c)]; };
    for (const Facet& fc : facets_of(cp)) {
        if (lab(fc.delta) != lab(fc.gamma) || lab(fc.delta_p) != lab(fc.gamma_p)) {
            return false;
        }
        for (const Cover& e : fc.interiors) {
            const auto le = lab(e);
            if (!(lab(fc.delta) < le && lab(fc.delta_p) < le && lab(fc.gamma) < le &&
                  lab(fc.gamma_p) < le)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace latder
