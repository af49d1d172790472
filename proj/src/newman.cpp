#include "latder/newman.hpp"

#include <algorithm>
#include <numeric>

#include "latder/errors.hpp"

namespace latder {

namespace {

std::string num(std::size_t x) {
    return std::to_string(x);
}

}  // namespace

bool is_permutation(const Permutation& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (auto x : w) {
        if (x < 1 || x > w.size() || seen[x]) {
            return false;
        }
        seen[x] = true;
    }
    return true;
}

std::string to_string(const std::vector<std::uint32_t>& word) {
    std::string out;
    const bool wide = std::any_of(word.begin(), word.end(), [](auto x) { return x > 9; });
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (wide && i > 0) {
            out += ',';
        }
        out += std::to_string(word[i]);
    }
    return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
    Permutation w(n);
    std::iota(w.begin(), w.end(), 1U);
    std::vector<Permutation> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::size_t permutation_rank(const Permutation& w) {
    if (!is_permutation(w)) {
        throw InvalidArgumentError("not a permutation: " + to_string(w));
    }
    const std::size_t n = w.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            smaller += w[j] < w[i] ? 1 : 0;
        }
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

std::vector<std::size_t> increases(const Permutation& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i - 1] < w[i]) {
            out.push_back(i);
        }
    }
    return out;
}

Permutation swap_positions(const Permutation& w, std::size_t i) {
    if (i < 1 || i >= w.size()) {
        throw IndexError("position " + num(i) + " out of range for length " + num(w.size()));
    }
    Permutation out = w;
    std::swap(out[i - 1], out[i]);
    return out;
}

bool is_bracketing_vector(const BracketingVector& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 1; i <= n; ++i) {
        if (v[i - 1] < i || v[i - 1] > n) {
            return false;
        }
        for (std::size_t j = i + 1; j <= v[i - 1]; ++j) {
            if (v[j - 1] > v[i - 1]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<BracketingVector> all_bracketing_vectors(std::size_t n) {
    std::vector<BracketingVector> out;
    BracketingVector v(n);
    // Depth-first over positions in order gives lexicographic output.
    auto fill = [&](auto& self, std::size_t pos) -> void {
        if (pos == n) {
            if (is_bracketing_vector(v)) {
                out.push_back(v);
            }
            return;
        }
        for (std::uint32_t x = static_cast<std::uint32_t>(pos + 1); x <= n; ++x) {
            v[pos] = x;
            // Prune: earlier brackets enclosing pos+1 bound its value.
            bool ok = true;
            for (std::size_t i = 0; i < pos && ok; ++i) {
                ok = !(pos + 1 <= v[i] && x > v[i]);
            }
            if (ok) {
                self(self, pos + 1);
            }
        }
    };
    if (n > 0) {
        fill(fill, 0);
    } else {
        out.push_back(v);
    }
    return out;
}

std::vector<std::size_t> splits(const BracketingVector& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= n; ++k) {
        if (v[k - 1] >= n) {
            continue;
        }
        const auto next = v[v[k - 1]];  // v_{v_k + 1}
        bool ok = true;
        for (std::size_t i = 1; i < k && ok; ++i) {
            ok = !(k <= v[i - 1] && next > v[i - 1]);
        }
        if (ok) {
            out.push_back(k);
        }
    }
    return out;
}

BracketingVector bracket_cover(const BracketingVector& v, std::size_t k) {
    const auto s = splits(v);
    if (std::find(s.begin(), s.end(), k) == s.end()) {
        throw NotASplitError(num(k) + " is not a split of " + to_string(v));
    }
    BracketingVector out = v;
    out[k - 1] = v[v[k - 1]];
    return out;
}

std::uint32_t OrdinalMap::operator()(std::uint32_t x) const {
    if (x < 1 || x > domain) {
        throw IndexError(num(x) + " outside [" + num(domain) + "]");
    }
    return table[x - 1];
}

OrdinalMap ordinal_skip(std::size_t i, std::size_t n) {
    if (i < 1 || i > n) {
        throw IndexError("skip(" + num(i) + "," + num(n) + "): need 1 <= i <= n");
    }
    OrdinalMap m{n - 1, n, {}};
    for (std::uint32_t x = 1; x < n; ++x) {
        m.table.push_back(x < i ? x : x + 1);
    }
    return m;
}

OrdinalMap ordinal_merge(std::size_t k, std::size_t n) {
    if (k < 1 || k + 1 > n) {
        throw IndexError("merge(" + num(k) + "," + num(n) + "): need 1 <= k <= n-1");
    }
    OrdinalMap m{n, n - 1, {}};
    for (std::uint32_t x = 1; x <= n; ++x) {
        m.table.push_back(x <= k ? x : x - 1);
    }
    return m;
}

OrdinalMap compose(const OrdinalMap& outer, const OrdinalMap& inner) {
    if (inner.codomain != outer.domain) {
        throw InvalidArgumentError("cannot compose [" + num(inner.codomain) + "] with [" +
                                   num(outer.domain) + "]");
    }
    OrdinalMap m{inner.domain, outer.codomain, {}};
    for (auto y : inner.table) {
        m.table.push_back(outer(y));
    }
    return m;
}

OrdinalMap compose(const std::vector<OrdinalMap>& maps) {
    if (maps.empty()) {
        throw InvalidArgumentError("compose needs at least one map");
    }
    OrdinalMap acc = maps.back();
    for (auto it = maps.rbegin() + 1; it != maps.rend(); ++it) {
        acc = compose(*it, acc);
    }
    return acc;
}

namespace {

// A self-map of [n] given as a word, as an OrdinalMap (not necessarily monotone).
OrdinalMap as_map(const std::vector<std::uint32_t>& word) {
    return OrdinalMap{word.size(), word.size(), word};
}

}  // namespace

Permutation psi_perm(std::size_t k, const Permutation& w, std::size_t i) {
    const std::size_t n = w.size();
    if (!is_permutation(w) || n < 2 || i < 1 || i >= n || k < 1 || k >= n ||
        w[i - 1] != k || w[i] != k + 1) {
        throw NotPerspectiveError("(" + to_string(w) + "," + num(i) +
                                  ") is not perspective to the atom " + num(k));
    }
    return compose({ordinal_merge(k, n), as_map(w), ordinal_skip(i, n)}).table;
}

std::pair<Permutation, std::size_t> psi_perm_inverse(std::size_t k, const Permutation& u) {
    const std::size_t n = u.size() + 1;
    if (!is_permutation(u) || k < 1 || k >= n) {
        throw InvalidArgumentError("psi_perm_inverse: bad arguments");
    }
    const std::size_t i =
        static_cast<std::size_t>(std::find(u.begin(), u.end(), k) - u.begin()) + 1;
    const OrdinalMap skip = ordinal_skip(k, n);
    const OrdinalMap merge = ordinal_merge(i, n);
    Permutation w(n);
    for (std::uint32_t j = 1; j <= n; ++j) {
        w[j - 1] = j == i ? static_cast<std::uint32_t>(k) : skip(u[merge(j) - 1]);
    }
    return {w, i};
}

BracketingVector psi_tamari(const BracketingVector& v, std::size_t k) {
    const std::size_t n = v.size();
    const auto s = splits(v);
    if (!is_bracketing_vector(v) || std::find(s.begin(), s.end(), k) == s.end() ||
        v[k - 1] != k) {
        throw NotPerspectiveError("(" + to_string(v) + "," + num(k) +
                                  ") is not perspective to the atom " + num(k));
    }
    return compose({ordinal_merge(k, n), as_map(v), ordinal_skip(k, n)}).table;
}

std::pair<BracketingVector, std::size_t> psi_tamari_inverse(std::size_t k,
                                                            const BracketingVector& w) {
    const std::size_t n = w.size() + 1;
    if (!is_bracketing_vector(w) || k < 1 || k >= n) {
        throw InvalidArgumentError("psi_tamari_inverse: bad arguments");
    }
    const OrdinalMap skip = ordinal_skip(k, n);
    const OrdinalMap merge = ordinal_merge(k, n);
    BracketingVector v(n);
    for (std::uint32_t i = 1; i <= n; ++i) {
        v[i - 1] = i == k ? static_cast<std::uint32_t>(k) : skip(w[merge(i) - 1]);
    }
    return {v, k};
}

std::size_t first_difference(const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] != b[i]) {
            return i + 1;
        }
    }
    return 0;
}

std::vector<std::string> multinomial_words(const std::vector<std::size_t>& profile) {
    std::string w;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        w.append(profile[i], static_cast<char>('a' + i));
    }
    std::vector<std::string> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace latder
