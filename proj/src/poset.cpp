#include "latder/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "latder/errors.hpp"

namespace latder {

namespace {

void check_names(std::size_t size, const std::vector<std::string>& names) {
    if (!names.empty() && names.size() != size) {
        throw InvalidArgumentError("names: expected " + std::to_string(size) + " entries, got " +
                                   std::to_string(names.size()));
    }
}

void check_edges(std::size_t size, const std::vector<Edge>& edges) {
    for (const auto& e : edges) {
        if (e.lo >= size || e.hi >= size) {
            throw IndexError("edge [" + std::to_string(e.lo) + "," + std::to_string(e.hi) +
                             "] out of range for size " + std::to_string(size));
        }
        if (e.lo == e.hi) {
            throw CycleError("self-loop on element " + std::to_string(e.lo));
        }
    }
}

// Reflexive-transitive closure of an edge list; throws CycleError on cycles.
BitMatrix closure_of(std::size_t size, const std::vector<Edge>& edges) {
    std::vector<std::vector<Elem>> succ(size);
    std::vector<std::size_t> indegree(size, 0);
    for (const auto& e : edges) {
        succ[e.lo].push_back(e.hi);
        ++indegree[e.hi];
    }
    std::vector<Elem> topo;
    topo.reserve(size);
    for (Elem x = 0; x < size; ++x) {
        if (indegree[x] == 0) {
            topo.push_back(x);
        }
    }
    for (std::size_t head = 0; head < topo.size(); ++head) {
        for (Elem y : succ[topo[head]]) {
            if (--indegree[y] == 0) {
                topo.push_back(y);
            }
        }
    }
    if (topo.size() != size) {
        throw CycleError("cycle in covering relation");
    }
    BitMatrix leq(size);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const Elem x = *it;
        leq.set(x, x);
        for (Elem y : succ[x]) {
            leq.row(x) |= leq.row(y);
        }
    }
    return leq;
}

}  // namespace

FinitePoset FinitePoset::assemble(BitMatrix leq, std::vector<std::string> names) {
    FinitePoset p;
    const std::size_t n = leq.size();
    p.geq_ = leq.transposed();
    p.leq_ = std::move(leq);
    p.names_ = std::move(names);
    p.upper_.assign(n, {});
    p.lower_.assign(n, {});
    for (Elem x = 0; x < n; ++x) {
        const BitSet& above = p.leq_.row(x);
        above.for_each([&](std::size_t y) {
            if (y == x) {
                return;
            }
            // x < y is a cover iff the closed interval [x, y] has two elements.
            if ((above & p.geq_.row(y)).count() == 2) {
                p.upper_[x].push_back(static_cast<Elem>(y));
                p.lower_[y].push_back(x);
                p.hasse_.push_back({x, static_cast<Elem>(y)});
            }
        });
    }
    std::sort(p.hasse_.begin(), p.hasse_.end());
    return p;
}

FinitePoset FinitePoset::from_hasse(std::size_t size, std::vector<Edge> hasse,
                                    std::vector<std::string> names) {
    check_names(size, names);
    check_edges(size, hasse);
    std::sort(hasse.begin(), hasse.end());
    if (auto dup = std::adjacent_find(hasse.begin(), hasse.end()); dup != hasse.end()) {
        throw NotReducedError("duplicate edge [" + std::to_string(dup->lo) + "," +
                              std::to_string(dup->hi) + "]");
    }
    BitMatrix leq = closure_of(size, hasse);
    const BitMatrix geq = leq.transposed();
    for (const auto& e : hasse) {
        if ((leq.row(e.lo) & geq.row(e.hi)).count() != 2) {
            throw NotReducedError("edge [" + std::to_string(e.lo) + "," + std::to_string(e.hi) +
                                  "] is implied transitively");
        }
    }
    return assemble(std::move(leq), std::move(names));
}

FinitePoset FinitePoset::from_relations(std::size_t size, const std::vector<Edge>& edges,
                                        std::vector<std::string> names) {
    check_names(size, names);
    check_edges(size, edges);
    return assemble(closure_of(size, edges), std::move(names));
}

FinitePoset FinitePoset::from_order(BitMatrix leq, std::vector<std::string> names) {
    const std::size_t n = leq.size();
    check_names(n, names);
    for (std::size_t i = 0; i < n; ++i) {
        leq.set(i, i);
    }
    leq.close_transitively();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (leq.test(i, j) && leq.test(j, i)) {
                throw CycleError("order relation is not antisymmetric at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
            }
        }
    }
    return assemble(std::move(leq), std::move(names));
}

bool FinitePoset::is_cover(Elem lo, Elem hi) const {
    check_index(lo);
    check_index(hi);
    const auto& ups = upper_[lo];
    return std::find(ups.begin(), ups.end(), hi) != ups.end();
}

std::string FinitePoset::name(Elem x) const {
    return names_.empty() ? std::to_string(x) : names_[x];
}

FinitePoset FinitePoset::dual() const {
    return assemble(geq_, names_);
}

FinitePoset FinitePoset::induced(const std::vector<Elem>& elements) const {
    const std::size_t m = elements.size();
    BitMatrix sub(m);
    std::vector<std::string> sub_names;
    for (std::size_t i = 0; i < m; ++i) {
        check_index(elements[i]);
        for (std::size_t j = 0; j < m; ++j) {
            if (leq(elements[i], elements[j])) {
                sub.set(i, j);
            }
        }
        if (!names_.empty()) {
            sub_names.push_back(names_[elements[i]]);
        }
    }
    return from_order(std::move(sub), std::move(sub_names));
}

void FinitePoset::check_index(Elem x) const {
    if (x >= size()) {
        throw IndexError("element id " + std::to_string(x) + " out of range for size " +
                         std::to_string(size()));
    }
}

std::optional<Elem> poset_meet(const FinitePoset& poset, Elem x, Elem y) {
    poset.check_index(x);
    poset.check_index(y);
    const BitSet lower = poset.down(x) & poset.down(y);
    const std::size_t n = lower.count();
    std::optional<Elem> result;
    lower.for_each([&](std::size_t z) {
        if (!result && poset.down(static_cast<Elem>(z)).count() == n) {
            result = static_cast<Elem>(z);
        }
    });
    return result;
}

std::optional<Elem> poset_join(const FinitePoset& poset, Elem x, Elem y) {
    poset.check_index(x);
    poset.check_index(y);
    const BitSet upper = poset.up(x) & poset.up(y);
    const std::size_t n = upper.count();
    std::optional<Elem> result;
    upper.for_each([&](std::size_t z) {
        if (!result && poset.up(static_cast<Elem>(z)).count() == n) {
            result = static_cast<Elem>(z);
        }
    });
    return result;
}

std::vector<Hat> hats(const FinitePoset& poset) {
    std::vector<Hat> out;
    for (Elem v = 0; v < poset.size(); ++v) {
        const auto& lows = poset.lower_covers(v);
        for (std::size_t a = 0; a < lows.size(); ++a) {
            for (std::size_t b = a + 1; b < lows.size(); ++b) {
                out.push_back({lows[a], v, lows[b]});
            }
        }
    }
    return out;
}

bool has_pullbacks(const FinitePoset& poset, PullbackMode mode) {
    const auto n = static_cast<Elem>(poset.size());
    if (mode == PullbackMode::hats_only) {
        const auto all = hats(poset);
        return std::all_of(all.begin(), all.end(), [&](const Hat& h) {
            return poset_meet(poset, h.left, h.right).has_value();
        });
    }
    // Every pair with a common upper bound is the base of some cospan.
    for (Elem u = 0; u < n; ++u) {
        for (Elem w = u + 1; w < n; ++w) {
            if (poset.up(u).intersects(poset.up(w)) && !poset_meet(poset, u, w)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<PosetComponent> components(const FinitePoset& poset) {
    const std::size_t n = poset.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : poset.hasse()) {
        const auto a = find(e.lo);
        const auto b = find(e.hi);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<PosetComponent> out;
    std::vector<std::size_t> slot(n, n);
    for (Elem x = 0; x < n; ++x) {
        const auto root = find(x);
        if (slot[root] == n) {
            slot[root] = out.size();
            out.emplace_back();
        }
        auto& comp = out[slot[root]];
        comp.elements.push_back(x);
        if (poset.lower_covers(x).empty()) {
            comp.minimal.push_back(x);
        }
        if (poset.upper_covers(x).empty()) {
            comp.maximal.push_back(x);
        }
    }
    return out;
}

std::size_t height(const FinitePoset& poset) {
    const std::size_t n = poset.size();
    std::vector<Elem> order(n);
    std::iota(order.begin(), order.end(), 0);
    // |down(x)| strictly increases along the order, so this is a linear extension.
    std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
        return poset.down(a).count() < poset.down(b).count();
    });
    std::vector<std::size_t> depth(n, 0);
    std::size_t best = 0;
    for (Elem x : order) {
        for (Elem y : poset.upper_covers(x)) {
            depth[y] = std::max(depth[y], depth[x] + 1);
        }
        best = std::max(best, depth[x]);
    }
    return best;
}

}  // namespace latder
