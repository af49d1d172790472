#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latder/lattice.hpp"
#include "latder/poset.hpp"

namespace latder {

/// Guards against accidentally huge constructions; SizeError beyond them.
struct GeneratorLimits {
    std::size_t max_elements = 100000;
    /// Largest n accepted by permutohedron(n).
    std::size_t max_permutohedron = 6;
};

/// Subsets of {1..n}, element id = bitmask.
FiniteLattice boolean(std::size_t n, const GeneratorLimits& limits = {});
/// 0 < 1 < ... < n-1; n >= 1.
FiniteLattice chain(std::size_t n, const GeneratorLimits& limits = {});
/// N5 with bot=0, a=1, b=2, c=3, top=4 and b < c.
FiniteLattice pentagon();
/// M3 with bot=0, atoms x=1, y=2, z=3, top=4.
FiniteLattice diamond();
/// Componentwise order; (a, b) has id a * |second| + b.
FiniteLattice product(const FiniteLattice& first, const FiniteLattice& second,
                      const GeneratorLimits& limits = {});

/// Weak order on permutations of [n], ids in lexicographic order.
FiniteLattice permutohedron(std::size_t n, const GeneratorLimits& limits = {});
/// Bracketing vectors of length n, ids in lexicographic order.
FiniteLattice tamari(std::size_t n, const GeneratorLimits& limits = {});
/// Words with the given letter multiplicities, ids in lexicographic order.
FiniteLattice multinomial(const std::vector<std::size_t>& profile,
                          const GeneratorLimits& limits = {});

/// Completion by cuts: intersections of principal ideals (plus the whole
/// poset), ordered by inclusion and listed by size, then lexicographically.
FiniteLattice dedekind_macneille(const FinitePoset& poset, const GeneratorLimits& limits = {});

/// xorshift64* generator; the constants are part of the file format contract.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed);
    std::uint64_t next();
    /// Uniform in [0, 1) with 53 bits.
    double uniform();

private:
    std::uint64_t state_;
};

/// For i < j, an edge i -> j with probability `density`; the result is the
/// transitive closure. Deterministic per seed.
FinitePoset random_poset(std::size_t size, double density, std::uint64_t seed,
                         const GeneratorLimits& limits = {});

}  // namespace latder
