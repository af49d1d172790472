#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace latder;

TEST_CASE("build_lattice on the four-element Boolean algebra") {
    const auto L = build_lattice(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(L.bottom() == 0);
    CHECK(L.top() == 3);
    CHECK(L.meet(1, 2) == 0);
    CHECK(L.join(1, 2) == 3);
}

TEST_CASE("pentagon joins") {
    const auto L = build_lattice(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}});
    CHECK(L.join(1, 2) == 4);
    CHECK(L.meet(1, 3) == 0);
    CHECK(L.join(2, 3) == 3);
}

TEST_CASE("build_lattice rejects bad input") {
    CHECK_THROWS_AS(build_lattice(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}}), NotLatticeError);
    CHECK_THROWS_AS(build_lattice(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
    CHECK_THROWS_AS(build_lattice(3, {{0, 1}, {1, 2}, {0, 2}}), NotReducedError);
    CHECK_THROWS_AS(build_lattice(2, {{0, 5}}), IndexError);
    CHECK_THROWS_AS(build_lattice(2, {{1, 1}}), CycleError);
    CHECK_THROWS_AS(build_lattice(0, {}), NotLatticeError);
    CHECK_THROWS_AS(build_lattice(2, {{0, 1}}, {"only-one"}), InvalidArgumentError);
}

TEST_CASE("one-element lattice") {
    const auto L = build_lattice(1, {});
    CHECK(L.bottom() == 0);
    CHECK(L.top() == 0);
    CHECK(cover_poset(L).size() == 0);
}

TEST_CASE("lenient loader reduces redundant edges") {
    const auto L = build_lattice_lenient(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(L.hasse().size() == 2);
}

TEST_CASE("meet and join index errors") {
    const auto L = boolean(2);
    CHECK_THROWS_AS(L.meet(0, 9), IndexError);
    CHECK_THROWS_AS(L.join(7, 0), IndexError);
}

TEST_CASE("irreducibles") {
    const auto B2 = irreducibles(boolean(2));
    CHECK(B2.join_irreducibles() == std::vector<IrreduciblePair>{{1, 0}, {2, 0}});
    CHECK(B2.meet_irreducibles() == std::vector<IrreduciblePair>{{1, 3}, {2, 3}});

    const auto N5 = irreducibles(pentagon());
    CHECK(N5.join_irreducibles() == std::vector<IrreduciblePair>{{1, 0}, {2, 0}, {3, 2}});

    const auto C3 = irreducibles(chain(3));
    CHECK(C3.join_irreducibles() == std::vector<IrreduciblePair>{{1, 0}, {2, 1}});
    CHECK_THROWS_AS(C3.lower_star(0), NotIrreducibleError);
}

TEST_CASE("arrow relations") {
    const auto B2 = boolean(2);
    CHECK(arrows(B2, 1, 2) == Arrow::both);
    CHECK(arrows(B2, 1, 1) == Arrow::none);
    const auto N5 = pentagon();
    CHECK(arrows(N5, 3, 1) == Arrow::up);
    CHECK_THROWS_AS(arrows(N5, 0, 1), NotIrreducibleError);
}

TEST_CASE("dualize") {
    const auto C3 = chain(3);
    CHECK(are_isomorphic(dualize(C3), C3).found);
    const auto N5 = pentagon();
    CHECK(are_isomorphic(dualize(N5), N5).found);
    const auto back = dualize(dualize(N5));
    for (Elem x = 0; x < 5; ++x) {
        for (Elem y = 0; y < 5; ++y) {
            CHECK(back.leq(x, y) == N5.leq(x, y));
            CHECK(back.meet(x, y) == N5.meet(x, y));
        }
    }
    const auto D = dualize(N5);
    CHECK(D.meet(1, 2) == N5.join(1, 2));
}

TEST_CASE("has_pullbacks") {
    // Two maximal elements A, B over the incomparable C, D, over E.
    const auto two_diamond =
        FinitePoset::from_hasse(5, {{2, 0}, {3, 0}, {2, 1}, {3, 1}, {4, 2}, {4, 3}},
                                {"A", "B", "C", "D", "E"});
    CHECK(has_pullbacks(two_diamond, PullbackMode::all_cospans));
    CHECK(has_pullbacks(two_diamond, PullbackMode::hats_only));

    // a, b each below both c and d: the cospan a < c > b has no pullback.
    const auto bowtie = FinitePoset::from_hasse(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_FALSE(has_pullbacks(bowtie, PullbackMode::all_cospans));
    CHECK_FALSE(has_pullbacks(bowtie, PullbackMode::hats_only));

    for (const auto& e : corpus::families()) {
        CHECK(has_pullbacks(e.lattice.poset(), PullbackMode::all_cospans));
    }
}

TEST_CASE("components") {
    const auto antichain = FinitePoset::from_hasse(3, {});
    CHECK(components(antichain).size() == 3);
    const auto comps = components(boolean(2).poset());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].minimal == std::vector<Elem>{0});
    CHECK(comps[0].maximal == std::vector<Elem>{3});
    const auto cov = components(cover_poset(boolean(2)).poset());
    REQUIRE(cov.size() == 2);
    CHECK(cov[0].elements.size() == 2);
    CHECK(cov[1].elements.size() == 2);
}

TEST_CASE("meets and joins agree with a scan over bounds") {
    for (const auto& e : corpus::full(10)) {
        const auto& L = e.lattice;
        const auto dualP = L.poset().dual();
        for (Elem x = 0; x < L.size(); ++x) {
            for (Elem y = 0; y < L.size(); ++y) {
                REQUIRE(oracle::scan_meet(L.poset(), x, y) == L.meet(x, y));
                REQUIRE(oracle::scan_meet(dualP, x, y) == L.join(x, y));
            }
        }
    }
}

TEST_CASE("arrows up imply their defining inequalities") {
    for (const auto& e : corpus::families()) {
        const auto& L = e.lattice;
        const Irreducibles irr(L);
        for (const auto& j : irr.join_irreducibles()) {
            for (const auto& m : irr.meet_irreducibles()) {
                const Arrow a = arrows(L, irr, j.element, m.element);
                if (has_up(a)) {
                    CHECK(L.leq(j.element, m.partner));
                    CHECK_FALSE(L.leq(j.element, m.element));
                }
                if (has_down(a)) {
                    CHECK(L.leq(j.partner, m.element));
                    CHECK_FALSE(L.leq(j.element, m.element));
                }
            }
        }
    }
}

TEST_CASE("pullbacks of hats decide pullbacks") {
    std::vector<FinitePoset> posets;
    for (const auto& e : corpus::full(30)) {
        posets.push_back(e.lattice.poset());
        posets.push_back(cover_poset(e.lattice).poset());
    }
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        posets.push_back(random_poset(3 + seed % 7, 0.35, seed));
    }
    for (const auto& p : posets) {
        CHECK(has_pullbacks(p, PullbackMode::all_cospans) ==
              has_pullbacks(p, PullbackMode::hats_only));
    }
}

TEST_CASE("components of posets with pullbacks and pushouts are lattices") {
    for (const auto& e : corpus::full(30)) {
        const FinitePoset P = cover_poset(e.lattice).poset();
        if (!has_pullbacks(P, PullbackMode::all_cospans) ||
            !has_pullbacks(P.dual(), PullbackMode::all_cospans)) {
            continue;
        }
        for (const auto& comp : components(P)) {
            CHECK_NOTHROW(FiniteLattice::from_poset(P.induced(comp.elements)));
        }
    }
}
