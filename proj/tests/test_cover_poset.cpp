#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace latder;

namespace {

// Ground-truth pushdown steps straight from the definition, over all covers.
std::set<std::pair<Cover, Cover>> pushdown_pairs_by_definition(const FiniteLattice& L) {
    std::set<std::pair<Cover, Cover>> out;
    for (const auto& d : L.hasse()) {
        for (const auto& g : L.hasse()) {
            for (Elem u : L.lower_covers(d.hi)) {
                if (u != d.lo && g.lo == L.meet(u, d.lo) && L.leq(g.hi, u)) {
                    out.emplace(Cover{d.lo, d.hi}, Cover{g.lo, g.hi});
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("cover poset of the pentagon") {
    const auto L = pentagon();
    const auto cp = cover_poset(L);
    REQUIRE(cp.size() == 5);
    CHECK(cp.covers() ==
          std::vector<Cover>{{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}});
    CHECK(cp.leq(0, 4));   // (bot,a) <= (c,top)
    CHECK(cp.leq(1, 2));   // (bot,b) <= (a,top)
    CHECK_FALSE(cp.leq(0, 3));
    CHECK_FALSE(cp.leq(1, 4));
    CHECK(components(cp.poset()).size() == 3);
    CHECK(cp.label(3) == "(b,c)");
    CHECK_FALSE(cp.index_of({0, 3}).has_value());
    CHECK_THROWS_AS(cp.require_index({0, 4}), InvalidCoverError);
}

TEST_CASE("pushdown and pushup steps") {
    const auto L = pentagon();
    CHECK(pushdown_steps(L, {3, 4}, 1) == std::vector<Cover>{{0, 1}});
    CHECK(pushdown_steps(L, {1, 4}, 3) == std::vector<Cover>{{0, 2}});
    CHECK(pushup_steps(L, {0, 1}, 2) == std::vector<Cover>{{3, 4}});
    CHECK(pushup_steps(L, {0, 2}, 1) == std::vector<Cover>{{1, 4}});
    CHECK_THROWS_AS(pushdown_steps(L, {3, 4}, 3), NotALowerCoverError);
    CHECK_THROWS_AS(pushdown_steps(L, {3, 4}, 2), NotALowerCoverError);
    CHECK_THROWS_AS(pushdown_steps(L, {0, 3}, 1), InvalidCoverError);
    CHECK_THROWS_AS(pushup_steps(L, {0, 1}, 1), NotAnUpperCoverError);
    CHECK_THROWS_AS(pushup_steps(L, {0, 1}, 3), NotAnUpperCoverError);
}

TEST_CASE("pushdown lattices") {
    CHECK(is_pushdown(pentagon()));
    CHECK(is_pushup(pentagon()));
    CHECK(is_pushdown(boolean(3)));
    CHECK_FALSE(is_pushdown(diamond()));
    CHECK_FALSE(is_pushup(diamond()));
}

TEST_CASE("pushdown paths") {
    const auto cp = cover_poset(pentagon());
    const auto path = pushdown_path(cp, {3, 4}, {0, 1});
    REQUIRE(path.has_value());
    REQUIRE(path->size() == 1);
    CHECK((*path)[0] == PushStep{{3, 4}, 1, {0, 1}, PushDirection::down});
    CHECK_FALSE(pushdown_path(cp, {3, 4}, {0, 2}).has_value());
    const auto trivial = pushdown_path(cp, {2, 3}, {2, 3});
    REQUIRE(trivial.has_value());
    CHECK(trivial->empty());
    CHECK_THROWS_AS(pushdown_path(cover_poset(diamond()), {3, 4}, {0, 1}), NotPushdownError);
}

TEST_CASE("pushdown relation matches its definition") {
    for (const auto& e : corpus::full(25)) {
        const auto& L = e.lattice;
        std::set<std::pair<Cover, Cover>> got;
        for (const auto& s : pushdown_relation(L)) {
            CHECK(s.direction == PushDirection::down);
            got.emplace(s.from, s.to);
        }
        CHECK(got == pushdown_pairs_by_definition(L));
    }
}

TEST_CASE("pushing lowers covers in any lattice") {
    for (const auto& e : corpus::full(25)) {
        const auto& L = e.lattice;
        for (const auto& s : pushdown_relation(L)) {
            CHECK(cover_leq(L, s.to, s.from));
            CHECK(s.to != s.from);
        }
        for (const auto& s : pushup_relation(L)) {
            CHECK(cover_leq(L, s.from, s.to));
            CHECK(s.to != s.from);
        }
    }
}

TEST_CASE("pushdown property agrees with its push characterization") {
    for (const auto& e : corpus::full(50)) {
        CHECK_MESSAGE(is_pushdown(e.lattice) == oracle::pushdown_by_equivalence(e.lattice),
                      e.name);
    }
}

TEST_CASE("pushup is pushdown of the dual") {
    for (const auto& e : corpus::full(30)) {
        CHECK(is_pushup(e.lattice) == is_pushdown(dualize(e.lattice)));
    }
}

TEST_CASE("the projections are conservative") {
    for (const auto& e : corpus::full(25)) {
        const auto cp = cover_poset(e.lattice);
        for (CoverIndex a = 0; a < cp.size(); ++a) {
            for (CoverIndex b = 0; b < cp.size(); ++b) {
                if (a != b && cp.leq(a, b)) {
                    CHECK(cp.cover(a).lo != cp.cover(b).lo);
                    CHECK(cp.cover(a).hi != cp.cover(b).hi);
                }
            }
        }
    }
}

TEST_CASE("in a pushdown lattice the pusher determines the step") {
    for (const auto& e : corpus::full(40)) {
        const auto& L = e.lattice;
        if (!is_pushdown(L)) {
            continue;
        }
        for (const auto& d : L.hasse()) {
            for (Elem u : L.lower_covers(d.hi)) {
                if (u != d.lo) {
                    CHECK(pushdown_steps(L, {d.lo, d.hi}, u).size() == 1);
                }
            }
        }
    }
}

TEST_CASE("in a pushdown lattice the order is the closure of pushdown") {
    for (const auto& e : corpus::full(40)) {
        const auto& L = e.lattice;
        if (!is_pushdown(L)) {
            continue;
        }
        const auto cp = cover_poset(L);
        const std::size_t m = cp.size();
        BitMatrix reach(m);
        for (CoverIndex i = 0; i < m; ++i) {
            reach.set(i, i);
        }
        for (const auto& s : pushdown_relation(L)) {
            reach.set(cp.require_index(s.to), cp.require_index(s.from));
        }
        reach.close_transitively();
        for (CoverIndex a = 0; a < m; ++a) {
            for (CoverIndex b = 0; b < m; ++b) {
                CHECK(reach.test(a, b) == cp.leq(a, b));
            }
        }
        // Every comparable pair is joined by an explicit path.
        for (CoverIndex a = 0; a < m; ++a) {
            for (CoverIndex b = 0; b < m; ++b) {
                const auto path = pushdown_path(cp, cp.cover(b), cp.cover(a));
                REQUIRE(path.has_value() == cp.leq(a, b));
                if (!path || path->empty()) {
                    continue;
                }
                CHECK(path->front().from == cp.cover(b));
                CHECK(path->back().to == cp.cover(a));
                for (std::size_t i = 0; i < path->size(); ++i) {
                    const auto& s = (*path)[i];
                    const auto steps = pushdown_steps(L, s.from, s.along);
                    CHECK(std::find(steps.begin(), steps.end(), s.to) != steps.end());
                    if (i > 0) {
                        CHECK((*path)[i - 1].to == s.from);
                    }
                }
            }
        }
    }
}

TEST_CASE("cover components partition the covers") {
    const auto cp = cover_poset(boolean(3));
    const auto cc = cover_components(cp);
    CHECK(cc.parts.size() == 3);
    std::size_t total = 0;
    for (std::size_t c = 0; c < cc.parts.size(); ++c) {
        total += cc.parts[c].size();
        for (CoverIndex i : cc.parts[c]) {
            CHECK(cc.component_of[i] == c);
        }
    }
    CHECK(total == cp.size());
}
