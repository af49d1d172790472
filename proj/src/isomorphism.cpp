#include "latder/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "latder/derived.hpp"
#include "latder/errors.hpp"
#include "latder/semidistributive.hpp"

namespace latder {

namespace {

using Signature = std::vector<std::size_t>;

// Longest chain ending at each element (depth) or starting there (height).
std::vector<std::size_t> chain_lengths(const FinitePoset& p, bool downward) {
    const std::size_t n = p.size();
    std::vector<Elem> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
        return p.down(a).count() < p.down(b).count();
    });
    if (!downward) {
        std::reverse(order.begin(), order.end());
    }
    std::vector<std::size_t> len(n, 0);
    for (Elem x : order) {
        for (Elem y : downward ? p.lower_covers(x) : p.upper_covers(x)) {
            len[x] = std::max(len[x], len[y] + 1);
        }
    }
    return len;
}

Signature initial_signature(const FinitePoset& p, const std::vector<std::size_t>& depth,
                            const std::vector<std::size_t>& height, Elem x) {
    return {p.lower_covers(x).size(), p.upper_covers(x).size(), depth[x], height[x],
            p.down(x).count(), p.up(x).count()};
}

// Refines colours of both posets together so that colour ids are shared.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const FinitePoset& p,
                                                                     const FinitePoset& q) {
    const std::array<const FinitePoset*, 2> posets{&p, &q};
    std::array<std::vector<std::size_t>, 2> colour;
    {
        std::map<Signature, std::size_t> ids;
        std::array<std::vector<Signature>, 2> sigs;
        for (int s = 0; s < 2; ++s) {
            const auto depth = chain_lengths(*posets[s], true);
            const auto height = chain_lengths(*posets[s], false);
            for (Elem x = 0; x < posets[s]->size(); ++x) {
                sigs[s].push_back(initial_signature(*posets[s], depth, height, x));
                ids.emplace(sigs[s].back(), 0);
            }
        }
        std::size_t next = 0;
        for (auto& [sig, id] : ids) {
            id = next++;
        }
        for (int s = 0; s < 2; ++s) {
            for (const auto& sig : sigs[s]) {
                colour[s].push_back(ids.at(sig));
            }
        }
    }
    std::size_t classes = 0;
    while (true) {
        std::map<Signature, std::size_t> ids;
        std::array<std::vector<Signature>, 2> sigs;
        for (int s = 0; s < 2; ++s) {
            const FinitePoset& poset = *posets[s];
            for (Elem x = 0; x < poset.size(); ++x) {
                Signature sig{colour[s][x]};
                Signature lows;
                Signature ups;
                for (Elem y : poset.lower_covers(x)) {
                    lows.push_back(colour[s][y]);
                }
                for (Elem y : poset.upper_covers(x)) {
                    ups.push_back(colour[s][y]);
                }
                std::sort(lows.begin(), lows.end());
                std::sort(ups.begin(), ups.end());
                sig.push_back(lows.size());
                sig.insert(sig.end(), lows.begin(), lows.end());
                sig.insert(sig.end(), ups.begin(), ups.end());
                sigs[s].push_back(std::move(sig));
                ids.emplace(sigs[s].back(), 0);
            }
        }
        std::size_t next = 0;
        for (auto& [sig, id] : ids) {
            id = next++;
        }
        for (int s = 0; s < 2; ++s) {
            for (std::size_t x = 0; x < sigs[s].size(); ++x) {
                colour[s][x] = ids.at(sigs[s][x]);
            }
        }
        if (ids.size() == classes) {
            break;
        }
        classes = ids.size();
    }
    return {colour[0], colour[1]};
}

}  // namespace

bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q,
                          const std::vector<Elem>& mapping) {
    const std::size_t n = p.size();
    if (q.size() != n || mapping.size() != n) {
        return false;
    }
    std::vector<bool> hit(n, false);
    for (Elem y : mapping) {
        if (y >= n || hit[y]) {
            return false;
        }
        hit[y] = true;
    }
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (p.leq(x, y) != q.leq(mapping[x], mapping[y])) {
                return false;
            }
        }
    }
    return true;
}

IsoResult are_isomorphic(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t n = p.size();
    if (q.size() != n || p.hasse().size() != q.hasse().size()) {
        return {};
    }
    const auto [cp, cq] = refine(p, q);
    {
        auto hp = cp;
        auto hq = cq;
        std::sort(hp.begin(), hp.end());
        std::sort(hq.begin(), hq.end());
        if (hp != hq) {
            return {};
        }
    }
    // Map P's elements along a linear extension so each new element is
    // checked against everything already placed below it.
    std::vector<Elem> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
        const auto da = p.down(a).count();
        const auto db = p.down(b).count();
        return da != db ? da < db : cp[a] < cp[b];
    });
    std::vector<std::vector<Elem>> candidates(n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (cp[x] == cq[y]) {
                candidates[x].push_back(y);
            }
        }
    }
    constexpr Elem kUnset = static_cast<Elem>(-1);
    std::vector<Elem> image(n, kUnset);
    std::vector<bool> used(n, false);
    auto consistent = [&](std::size_t depth, Elem x, Elem y) {
        for (std::size_t d = 0; d < depth; ++d) {
            const Elem a = order[d];
            const Elem b = image[a];
            if (p.leq(a, x) != q.leq(b, y) || p.leq(x, a) != q.leq(y, b)) {
                return false;
            }
        }
        return true;
    };
    auto search = [&](auto& self, std::size_t depth) -> bool {
        if (depth == n) {
            return true;
        }
        const Elem x = order[depth];
        for (Elem y : candidates[x]) {
            if (used[y] || !consistent(depth, x, y)) {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if (self(self, depth + 1)) {
                return true;
            }
            used[y] = false;
            image[x] = kUnset;
        }
        return false;
    };
    if (!search(search, 0)) {
        return {};
    }
    return {true, image};
}

IsoResult are_isomorphic(const FiniteLattice& p, const FiniteLattice& q) {
    return are_isomorphic(p.poset(), q.poset());
}

RegularityReport is_regular(const FiniteLattice& lattice) {
    if (!is_semidistributive(lattice)) {
        throw NotSemidistributiveError("regularity is defined for semidistributive lattices");
    }
    RegularityReport report;
    std::vector<FiniteLattice> representatives;
    std::vector<Cover> rep_covers;
    for (Elem a : lattice.upper_covers(lattice.bottom())) {
        const Cover alpha{lattice.bottom(), a};
        const DerivedLattice d = derived_lattice(lattice, alpha);
        AtomSummary s{alpha, d.lattice.size(), d.lattice.hasse().size(),
                      height(d.lattice.poset()), 0};
        std::size_t cls = 0;
        while (cls < representatives.size() &&
               !are_isomorphic(representatives[cls], d.lattice).found) {
            ++cls;
        }
        if (cls == representatives.size()) {
            representatives.push_back(d.lattice);
            rep_covers.push_back(alpha);
        }
        s.iso_class = cls;
        if (cls != 0 && !report.witness) {
            report.witness = std::make_pair(rep_covers.front(), alpha);
        }
        report.atoms.push_back(s);
    }
    report.regular = representatives.size() <= 1;
    return report;
}

}  // namespace latder
