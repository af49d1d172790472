#include "latder/lattice.hpp"

#include <algorithm>
#include <string>

#include "latder/errors.hpp"

namespace latder {

namespace {

// Greatest element of `bounds` whose principal set equals `bounds`, if any.
// `sizes[z]` is |principal(z)|; z in bounds implies principal(z) is a subset.
std::optional<Elem> extremum(const BitSet& bounds, const std::vector<std::size_t>& sizes) {
    const std::size_t n = bounds.count();
    for (std::size_t z = bounds.first(); z < bounds.size(); z = bounds.next(z + 1)) {
        if (sizes[z] == n) {
            return static_cast<Elem>(z);
        }
    }
    return std::nullopt;
}

}  // namespace

FiniteLattice FiniteLattice::from_poset(FinitePoset poset) {
    const std::size_t n = poset.size();
    if (n == 0) {
        throw NotLatticeError("the empty poset is not a lattice");
    }
    std::vector<std::size_t> down_size(n);
    std::vector<std::size_t> up_size(n);
    for (Elem x = 0; x < n; ++x) {
        down_size[x] = poset.down(x).count();
        up_size[x] = poset.up(x).count();
    }

    FiniteLattice lat;
    lat.meet_.assign(n * n, 0);
    lat.join_.assign(n * n, 0);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = x; y < n; ++y) {
            Elem m;
            Elem j;
            if (poset.leq(x, y)) {
                m = x;
                j = y;
            } else if (poset.leq(y, x)) {
                m = y;
                j = x;
            } else {
                auto lo = extremum(poset.down(x) & poset.down(y), down_size);
                if (!lo) {
                    throw NotLatticeError("elements " + poset.name(x) + " and " + poset.name(y) +
                                          " have no meet");
                }
                auto hi = extremum(poset.up(x) & poset.up(y), up_size);
                if (!hi) {
                    throw NotLatticeError("elements " + poset.name(x) + " and " + poset.name(y) +
                                          " have no join");
                }
                m = *lo;
                j = *hi;
            }
            lat.meet_[x * n + y] = lat.meet_[y * n + x] = m;
            lat.join_[x * n + y] = lat.join_[y * n + x] = j;
        }
    }
    // With all binary meets/joins present, a unique minimum and maximum exist.
    for (Elem x = 0; x < n; ++x) {
        if (up_size[x] == n) {
            lat.bottom_ = x;
        }
        if (down_size[x] == n) {
            lat.top_ = x;
        }
    }
    lat.poset_ = std::move(poset);
    return lat;
}

Elem FiniteLattice::meet(Elem x, Elem y) const {
    poset_.check_index(x);
    poset_.check_index(y);
    return meet_[static_cast<std::size_t>(x) * size() + y];
}

Elem FiniteLattice::join(Elem x, Elem y) const {
    poset_.check_index(x);
    poset_.check_index(y);
    return join_[static_cast<std::size_t>(x) * size() + y];
}

FiniteLattice build_lattice(std::size_t size, std::vector<Edge> hasse,
                            std::vector<std::string> names) {
    return FiniteLattice::from_poset(
        FinitePoset::from_hasse(size, std::move(hasse), std::move(names)));
}

FiniteLattice build_lattice_lenient(std::size_t size, const std::vector<Edge>& edges,
                                    std::vector<std::string> names) {
    return FiniteLattice::from_poset(FinitePoset::from_relations(size, edges, std::move(names)));
}

FiniteLattice dualize(const FiniteLattice& lattice) {
    return FiniteLattice::from_poset(lattice.poset().dual());
}

Irreducibles::Irreducibles(const FiniteLattice& lattice)
    : lower_star_(lattice.size(), kNone), upper_star_(lattice.size(), kNone) {
    for (Elem x = 0; x < lattice.size(); ++x) {
        if (const auto& lows = lattice.lower_covers(x); lows.size() == 1) {
            join_irr_.push_back({x, lows.front()});
            lower_star_[x] = lows.front();
        }
        if (const auto& ups = lattice.upper_covers(x); ups.size() == 1) {
            meet_irr_.push_back({x, ups.front()});
            upper_star_[x] = ups.front();
        }
    }
}

Elem Irreducibles::lower_star(Elem j) const {
    if (!is_join_irreducible(j)) {
        throw NotIrreducibleError("element " + std::to_string(j) + " is not join-irreducible");
    }
    return lower_star_[j];
}

Elem Irreducibles::upper_star(Elem m) const {
    if (!is_meet_irreducible(m)) {
        throw NotIrreducibleError("element " + std::to_string(m) + " is not meet-irreducible");
    }
    return upper_star_[m];
}

Irreducibles irreducibles(const FiniteLattice& lattice) {
    return Irreducibles(lattice);
}

std::string to_string(Arrow arrow) {
    switch (arrow) {
        case Arrow::none: return "none";
        case Arrow::up: return "up";
        case Arrow::down: return "down";
        case Arrow::both: return "both";
    }
    return "none";
}

Arrow arrows(const FiniteLattice& lattice, const Irreducibles& irr, Elem j, Elem m) {
    const Elem j_star = irr.lower_star(j);
    const Elem m_star = irr.upper_star(m);
    if (lattice.leq(j, m)) {
        return Arrow::none;
    }
    const bool up = lattice.leq(j, m_star);
    const bool down = lattice.leq(j_star, m);
    if (up && down) {
        return Arrow::both;
    }
    if (up) {
        return Arrow::up;
    }
    return down ? Arrow::down : Arrow::none;
}

Arrow arrows(const FiniteLattice& lattice, Elem j, Elem m) {
    return arrows(lattice, Irreducibles(lattice), j, m);
}

}  // namespace latder
