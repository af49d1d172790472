#include "latder/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "latder/errors.hpp"

namespace latder {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

Congruence from_union_find(std::size_t n, UnionFind& uf) {
    std::vector<std::vector<Elem>> classes;
    std::vector<std::size_t> slot(n, n);
    for (Elem x = 0; x < n; ++x) {
        const auto r = uf.find(x);
        if (slot[r] == n) {
            slot[r] = classes.size();
            classes.emplace_back();
        }
        classes[slot[r]].push_back(x);
    }
    Congruence c;
    c.class_of.assign(n, 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (Elem x : classes[i]) {
            c.class_of[x] = i;
        }
    }
    c.classes = std::move(classes);
    return c;
}

}  // namespace

Congruence partition_from_classes(const FiniteLattice& lattice,
                                  std::vector<std::vector<Elem>> classes) {
    const std::size_t n = lattice.size();
    std::vector<bool> seen(n, false);
    UnionFind uf(n);
    for (const auto& cls : classes) {
        if (cls.empty()) {
            throw InvalidArgumentError("empty congruence class");
        }
        for (Elem x : cls) {
            lattice.poset().check_index(x);
            if (seen[x]) {
                throw InvalidArgumentError("element " + std::to_string(x) +
                                           " appears in two classes");
            }
            seen[x] = true;
            uf.unite(cls.front(), x);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw InvalidArgumentError("classes do not cover every element");
    }
    return from_union_find(n, uf);
}

Congruence identity_congruence(const FiniteLattice& lattice) {
    UnionFind uf(lattice.size());
    return from_union_find(lattice.size(), uf);
}

Congruence full_congruence(const FiniteLattice& lattice) {
    UnionFind uf(lattice.size());
    for (Elem x = 1; x < lattice.size(); ++x) {
        uf.unite(0, x);
    }
    return from_union_find(lattice.size(), uf);
}

Congruence congruence_generated(const FiniteLattice& lattice,
                                const std::vector<std::pair<Elem, Elem>>& pairs) {
    const auto n = static_cast<Elem>(lattice.size());
    UnionFind uf(n);
    for (const auto& [x, y] : pairs) {
        lattice.poset().check_index(x);
        lattice.poset().check_index(y);
        uf.unite(x, y);
    }
    // Comparing each element with its class root suffices: the relation is
    // kept transitive by the union-find.
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem x = 0; x < n; ++x) {
            const auto r = static_cast<Elem>(uf.find(x));
            if (r == x) {
                continue;
            }
            for (Elem z = 0; z < n; ++z) {
                changed |= uf.unite(lattice.meet(x, z), lattice.meet(r, z));
                changed |= uf.unite(lattice.join(x, z), lattice.join(r, z));
            }
        }
    }
    return from_union_find(n, uf);
}

bool is_congruence(const FiniteLattice& lattice, const Congruence& theta) {
    const auto n = static_cast<Elem>(lattice.size());
    if (theta.class_of.size() != n) {
        return false;
    }
    for (const auto& cls : theta.classes) {
        const Elem r = cls.front();
        for (Elem x : cls) {
            for (Elem z = 0; z < n; ++z) {
                if (!theta.same(lattice.meet(x, z), lattice.meet(r, z)) ||
                    !theta.same(lattice.join(x, z), lattice.join(r, z))) {
                    return false;
                }
            }
        }
    }
    return true;
}

Elem mu_min(const FiniteLattice& lattice, const Congruence& theta, Elem x) {
    lattice.poset().check_index(x);
    const Irreducibles irr(lattice);
    Elem acc = lattice.bottom();
    for (const auto& [j, j_star] : irr.join_irreducibles()) {
        if (lattice.leq(j, x) && !theta.same(j_star, j)) {
            acc = lattice.join(acc, j);
        }
    }
    const auto& cls = theta.classes[theta.class_of.at(x)];
    const bool least = theta.same(acc, x) &&
                       std::all_of(cls.begin(), cls.end(), [&](Elem y) { return lattice.leq(acc, y); });
    if (!least) {
        throw NotACongruenceError("class of " + std::to_string(x) +
                                  " has no least element matching the join formula");
    }
    return acc;
}

std::vector<Elem> quotient_representatives(const FiniteLattice& lattice,
                                           const Congruence& theta) {
    if (!is_congruence(lattice, theta)) {
        throw NotACongruenceError("partition is not compatible with meet and join");
    }
    std::vector<Elem> reps;
    for (const auto& cls : theta.classes) {
        reps.push_back(mu_min(lattice, theta, cls.front()));
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

FiniteLattice quotient(const FiniteLattice& lattice, const Congruence& theta) {
    return FiniteLattice::from_poset(
        lattice.poset().induced(quotient_representatives(lattice, theta)));
}

}  // namespace latder
