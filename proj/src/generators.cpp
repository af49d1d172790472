#include "latder/generators.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "latder/errors.hpp"
#include "latder/newman.hpp"

namespace latder {

namespace {

void check_size(std::size_t requested, const GeneratorLimits& limits, const std::string& what) {
    if (requested > limits.max_elements) {
        throw SizeError(what + " would have " + std::to_string(requested) +
                        " elements, above the cap of " + std::to_string(limits.max_elements));
    }
}

// Saturating arithmetic for the size guards.
std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > SIZE_MAX / a) {
        return SIZE_MAX;
    }
    return a * b;
}

}  // namespace

FiniteLattice boolean(std::size_t n, const GeneratorLimits& limits) {
    if (n >= 63) {
        throw SizeError("boolean(" + std::to_string(n) + ") is too large");
    }
    const std::size_t size = std::size_t{1} << n;
    check_size(size, limits, "boolean(" + std::to_string(n) + ")");
    std::vector<Edge> edges;
    std::vector<std::string> names;
    for (std::size_t s = 0; s < size; ++s) {
        std::string name = "{";
        for (std::size_t b = 0; b < n; ++b) {
            if (s >> b & 1U) {
                if (name.size() > 1) {
                    name += ',';
                }
                name += std::to_string(b + 1);
            } else {
                edges.push_back({static_cast<Elem>(s), static_cast<Elem>(s | std::size_t{1} << b)});
            }
        }
        names.push_back(name + "}");
    }
    return build_lattice(size, std::move(edges), std::move(names));
}

FiniteLattice chain(std::size_t n, const GeneratorLimits& limits) {
    if (n == 0) {
        throw InvalidArgumentError("chain(n) needs n >= 1");
    }
    check_size(n, limits, "chain(" + std::to_string(n) + ")");
    std::vector<Edge> edges;
    for (Elem i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return build_lattice(n, std::move(edges));
}

FiniteLattice pentagon() {
    return build_lattice(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}},
                         {"bot", "a", "b", "c", "top"});
}

FiniteLattice diamond() {
    return build_lattice(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                         {"bot", "x", "y", "z", "top"});
}

FiniteLattice product(const FiniteLattice& first, const FiniteLattice& second,
                      const GeneratorLimits& limits) {
    const std::size_t m = second.size();
    const std::size_t size = sat_mul(first.size(), m);
    check_size(size, limits, "product");
    std::vector<Edge> edges;
    for (const Edge& e : first.hasse()) {
        for (Elem b = 0; b < m; ++b) {
            edges.push_back({static_cast<Elem>(e.lo * m + b), static_cast<Elem>(e.hi * m + b)});
        }
    }
    for (Elem a = 0; a < first.size(); ++a) {
        for (const Edge& e : second.hasse()) {
            edges.push_back({static_cast<Elem>(a * m + e.lo), static_cast<Elem>(a * m + e.hi)});
        }
    }
    std::vector<std::string> names;
    for (Elem a = 0; a < first.size(); ++a) {
        for (Elem b = 0; b < m; ++b) {
            names.push_back("(" + first.name(a) + "," + second.name(b) + ")");
        }
    }
    return build_lattice(size, std::move(edges), std::move(names));
}

FiniteLattice permutohedron(std::size_t n, const GeneratorLimits& limits) {
    if (n == 0) {
        throw InvalidArgumentError("permutohedron(n) needs n >= 1");
    }
    if (n > limits.max_permutohedron) {
        throw SizeError("permutohedron(" + std::to_string(n) + ") exceeds the cap n <= " +
                        std::to_string(limits.max_permutohedron));
    }
    std::size_t size = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        size = sat_mul(size, i);
    }
    check_size(size, limits, "permutohedron(" + std::to_string(n) + ")");
    const auto perms = all_permutations(n);
    std::vector<Edge> edges;
    std::vector<std::string> names;
    for (std::size_t r = 0; r < perms.size(); ++r) {
        names.push_back(to_string(perms[r]));
        for (std::size_t i : increases(perms[r])) {
            edges.push_back({static_cast<Elem>(r),
                             static_cast<Elem>(permutation_rank(swap_positions(perms[r], i)))});
        }
    }
    return build_lattice(perms.size(), std::move(edges), std::move(names));
}

FiniteLattice tamari(std::size_t n, const GeneratorLimits& limits) {
    if (n == 0) {
        throw InvalidArgumentError("tamari(n) needs n >= 1");
    }
    // Catalan(n) = C(2n, n) / (n + 1), computed incrementally with saturation.
    std::size_t catalan = 1;
    for (std::size_t i = 0; i < n && catalan <= limits.max_elements; ++i) {
        catalan = sat_mul(catalan, 2 * (2 * i + 1)) / (i + 2);
    }
    check_size(catalan, limits, "tamari(" + std::to_string(n) + ")");
    const auto vectors = all_bracketing_vectors(n);
    std::map<BracketingVector, Elem> index;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        index.emplace(vectors[i], static_cast<Elem>(i));
    }
    std::vector<Edge> edges;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        names.push_back("(" + to_string(vectors[i]) + ")");
        for (std::size_t k : splits(vectors[i])) {
            edges.push_back({static_cast<Elem>(i), index.at(bracket_cover(vectors[i], k))});
        }
    }
    return build_lattice(vectors.size(), std::move(edges), std::move(names));
}

FiniteLattice multinomial(const std::vector<std::size_t>& profile, const GeneratorLimits& limits) {
    if (profile.size() > 26) {
        throw InvalidArgumentError("multinomial: at most 26 letters");
    }
    std::size_t total = 0;
    for (auto v : profile) {
        total += v;
    }
    if (total == 0) {
        throw InvalidArgumentError("multinomial: the profile must have a positive sum");
    }
    // Multinomial coefficient as a product of binomials, saturating.
    std::size_t count = 1;
    std::size_t placed = 0;
    for (auto v : profile) {
        for (std::size_t i = 1; i <= v && count <= limits.max_elements; ++i) {
            count = sat_mul(count, placed + i) / i;
        }
        placed += v;
    }
    check_size(count, limits, "multinomial");
    const auto words = multinomial_words(profile);
    std::map<std::string, Elem> index;
    for (std::size_t i = 0; i < words.size(); ++i) {
        index.emplace(words[i], static_cast<Elem>(i));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t p = 0; p + 1 < total; ++p) {
            if (words[i][p] < words[i][p + 1]) {
                std::string w = words[i];
                std::swap(w[p], w[p + 1]);
                edges.push_back({static_cast<Elem>(i), index.at(w)});
            }
        }
    }
    return build_lattice(words.size(), std::move(edges), words);
}

FiniteLattice dedekind_macneille(const FinitePoset& poset, const GeneratorLimits& limits) {
    const std::size_t n = poset.size();
    BitSet everything(n);
    everything.set_all();
    std::vector<BitSet> cuts{everything};
    auto add = [&](const BitSet& s) {
        if (std::find(cuts.begin(), cuts.end(), s) == cuts.end()) {
            cuts.push_back(s);
            check_size(cuts.size(), limits, "dedekind_macneille");
        }
    };
    for (Elem x = 0; x < n; ++x) {
        add(poset.down(x));
    }
    // Close under pairwise intersection; new sets are appended and revisited.
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            add(cuts[i] & cuts[j]);
        }
    }
    std::sort(cuts.begin(), cuts.end(), [](const BitSet& a, const BitSet& b) {
        const auto ca = a.count();
        const auto cb = b.count();
        return ca != cb ? ca < cb : a.to_vector() < b.to_vector();
    });
    BitMatrix order(cuts.size());
    for (std::size_t a = 0; a < cuts.size(); ++a) {
        for (std::size_t b = 0; b < cuts.size(); ++b) {
            if (cuts[a].is_subset_of(cuts[b])) {
                order.set(a, b);
            }
        }
    }
    return FiniteLattice::from_poset(FinitePoset::from_order(std::move(order)));
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(seed ^ 0x9E3779B97F4A7C15ULL) {
    if (state_ == 0) {
        state_ = 0x9E3779B97F4A7C15ULL;
    }
}

std::uint64_t Xorshift64Star::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

double Xorshift64Star::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

FinitePoset random_poset(std::size_t size, double density, std::uint64_t seed,
                         const GeneratorLimits& limits) {
    if (!(density >= 0.0 && density <= 1.0)) {
        throw InvalidArgumentError("density must lie in [0, 1]");
    }
    check_size(size, limits, "random_poset");
    Xorshift64Star rng(seed);
    std::vector<Edge> edges;
    for (Elem i = 0; i < size; ++i) {
        for (Elem j = i + 1; j < size; ++j) {
            if (rng.uniform() < density) {
                edges.push_back({i, j});
            }
        }
    }
    return FinitePoset::from_relations(size, edges);
}

}  // namespace latder
