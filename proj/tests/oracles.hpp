#pragma once

// Independent reference implementations used only by the tests. Each one
// follows a textbook definition directly and shares no code path with the
// library routine it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latder/latder.hpp"

namespace oracle {

using latder::Elem;
using latder::FiniteLattice;
using latder::FinitePoset;

inline bool leq(const FinitePoset& p, Elem a, Elem b) { return p.leq(a, b); }

/// Poset isomorphism by trying every bijection.
inline bool brute_isomorphic(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t n = p.size();
    if (q.size() != n) {
        return false;
    }
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) {
            for (Elem y = 0; y < n && ok; ++y) {
                ok = p.leq(x, y) == q.leq(perm[x], perm[y]);
            }
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Greatest lower bound by scanning all lower bounds.
inline std::optional<Elem> scan_meet(const FinitePoset& p, Elem x, Elem y) {
    std::vector<Elem> lows;
    for (Elem z = 0; z < p.size(); ++z) {
        if (p.leq(z, x) && p.leq(z, y)) {
            lows.push_back(z);
        }
    }
    for (Elem z : lows) {
        if (std::all_of(lows.begin(), lows.end(), [&](Elem w) { return p.leq(w, z); })) {
            return z;
        }
    }
    return std::nullopt;
}

/// j D k by the classical definition: j != k and some p has
/// j <= k ∨ p but j !<= k_* ∨ p.
inline std::set<std::pair<Elem, Elem>> classical_D(const FiniteLattice& L) {
    std::vector<std::pair<Elem, Elem>> ji;  // (j, j_*)
    for (Elem x = 0; x < L.size(); ++x) {
        if (L.lower_covers(x).size() == 1) {
            ji.emplace_back(x, L.lower_covers(x).front());
        }
    }
    std::set<std::pair<Elem, Elem>> out;
    for (const auto& [j, js] : ji) {
        for (const auto& [k, ks] : ji) {
            if (j == k) {
                continue;
            }
            for (Elem p = 0; p < L.size(); ++p) {
                if (L.leq(j, L.join(k, p)) && !L.leq(j, L.join(ks, p))) {
                    out.emplace(j, k);
                    break;
                }
            }
        }
    }
    return out;
}

/// Cycle test by transitive closure (no graph search).
inline bool closure_has_cycle(const std::set<std::pair<Elem, Elem>>& rel, std::size_t n) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : rel) {
        r[a][b] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!r[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (r[k][j]) {
                    r[i][j] = true;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (r[i][i]) {
            return true;
        }
    }
    return false;
}

/// Pushdown property via the characterization: γ <= δ, δ ⇘_u ε, γ0 <= u
/// imply γ <= ε (stated over all covers, using only the definitions).
inline bool pushdown_by_equivalence(const FiniteLattice& L) {
    std::vector<std::pair<Elem, Elem>> covers;
    for (const auto& e : L.hasse()) {
        covers.emplace_back(e.lo, e.hi);
    }
    auto cov_leq = [&](std::pair<Elem, Elem> g, std::pair<Elem, Elem> d) {
        return L.leq(g.first, d.first) && !L.leq(g.second, d.first) && L.leq(g.second, d.second);
    };
    for (const auto& d : covers) {
        for (Elem u : L.lower_covers(d.second)) {
            if (u == d.first) {
                continue;
            }
            for (const auto& eps : covers) {
                const bool push = eps.first == L.meet(u, d.first) && L.leq(eps.second, u);
                if (!push) {
                    continue;
                }
                for (const auto& g : covers) {
                    if (cov_leq(g, d) && L.leq(g.first, u) && !cov_leq(g, eps)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Least congruence by closing a set of pairs naively.
inline std::vector<std::vector<bool>> naive_congruence(const FiniteLattice& L,
                                                       const std::vector<std::pair<Elem, Elem>>& seed) {
    const std::size_t n = L.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        r[i][i] = true;
    }
    for (const auto& [a, b] : seed) {
        r[a][b] = r[b][a] = true;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        auto put = [&](Elem a, Elem b) {
            if (!r[a][b]) {
                r[a][b] = r[b][a] = true;
                changed = true;
            }
        };
        for (Elem a = 0; a < n; ++a) {
            for (Elem b = 0; b < n; ++b) {
                if (!r[a][b]) {
                    continue;
                }
                for (Elem c = 0; c < n; ++c) {
                    put(L.meet(a, c), L.meet(b, c));
                    put(L.join(a, c), L.join(b, c));
                    if (r[b][c]) {
                        put(a, c);
                    }
                }
            }
        }
    }
    return r;
}

/// Inversions of a permutation word (1-based values): pairs of values (a, b)
/// with a < b and b appearing before a.
inline std::set<std::pair<std::uint32_t, std::uint32_t>> inversions(
    const std::vector<std::uint32_t>& w) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] > w[j]) {
                out.emplace(w[j], w[i]);
            }
        }
    }
    return out;
}

/// Weak order on S_n as inversion-set inclusion, elements in lexicographic order.
inline FiniteLattice weak_order(std::size_t n) {
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> w(n);
    std::iota(w.begin(), w.end(), 1U);
    do {
        perms.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    latder::BitMatrix m(perms.size());
    for (std::size_t a = 0; a < perms.size(); ++a) {
        const auto ia = inversions(perms[a]);
        for (std::size_t b = 0; b < perms.size(); ++b) {
            const auto ib = inversions(perms[b]);
            if (std::includes(ib.begin(), ib.end(), ia.begin(), ia.end())) {
                m.set(a, b);
            }
        }
    }
    return FiniteLattice::from_poset(FinitePoset::from_order(std::move(m)));
}

/// Multinomial order as inclusion of letter-occurrence inversions.
inline FiniteLattice word_order(const std::vector<std::string>& words) {
    auto inv = [](const std::string& w) {
        // Tag each letter occurrence by (letter, ordinal) and record which
        // larger-letter occurrences precede smaller-letter ones.
        std::map<char, int> seen;
        std::vector<std::pair<char, int>> tags;
        for (char c : w) {
            tags.emplace_back(c, seen[c]++);
        }
        std::set<std::pair<std::pair<char, int>, std::pair<char, int>>> out;
        for (std::size_t i = 0; i < tags.size(); ++i) {
            for (std::size_t j = i + 1; j < tags.size(); ++j) {
                if (tags[i].first > tags[j].first) {
                    out.emplace(tags[j], tags[i]);
                }
            }
        }
        return out;
    };
    latder::BitMatrix m(words.size());
    for (std::size_t a = 0; a < words.size(); ++a) {
        const auto ia = inv(words[a]);
        for (std::size_t b = 0; b < words.size(); ++b) {
            const auto ib = inv(words[b]);
            if (std::includes(ib.begin(), ib.end(), ia.begin(), ia.end())) {
                m.set(a, b);
            }
        }
    }
    return FiniteLattice::from_poset(FinitePoset::from_order(std::move(m)));
}

inline std::size_t catalan(std::size_t n) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < n; ++i) {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    return c;
}

inline std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
}

}  // namespace oracle
