#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace latder {

// Everything in this header is 1-based: a permutation is the word
// w(1)...w(n) over [n], a bracketing vector lists v_1..v_n, and positions
// passed in or returned count from 1.

using Permutation = std::vector<std::uint32_t>;
using BracketingVector = std::vector<std::uint32_t>;

bool is_permutation(const Permutation& w);
std::string to_string(const std::vector<std::uint32_t>& word);

/// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);
/// Position of w in lexicographic order (Lehmer code).
std::size_t permutation_rank(const Permutation& w);

/// Indices i with w_i < w_{i+1}.
std::vector<std::size_t> increases(const Permutation& w);
/// w ∘ σ^i, i.e. positions i and i+1 exchanged. Throws IndexError.
Permutation swap_positions(const Permutation& w, std::size_t i);

/// i <= v_i <= n and i < j <= v_i ⇒ v_j <= v_i.
bool is_bracketing_vector(const BracketingVector& v);
/// All bracketing vectors of length n in lexicographic order.
std::vector<BracketingVector> all_bracketing_vectors(std::size_t n);

/// k with v_k < n such that i < k <= v_i implies v_{v_k+1} <= v_i.
std::vector<std::size_t> splits(const BracketingVector& v);
/// v^k: v with position k replaced by v_{v_k+1}. Throws NotASplitError.
BracketingVector bracket_cover(const BracketingVector& v, std::size_t k);

/// A tabulated order-preserving map [domain] -> [codomain].
struct OrdinalMap {
    std::size_t domain = 0;
    std::size_t codomain = 0;
    std::vector<std::uint32_t> table;  // table[x-1] is the image of x

    /// Throws IndexError outside [domain].
    std::uint32_t operator()(std::uint32_t x) const;
};

/// [n-1] -> [n], the injection whose image misses i. Throws IndexError.
OrdinalMap ordinal_skip(std::size_t i, std::size_t n);
/// [n] -> [n-1], the surjection identifying k and k+1. Throws IndexError.
OrdinalMap ordinal_merge(std::size_t k, std::size_t n);
/// outer ∘ inner. Throws InvalidArgumentError when the sizes do not chain.
OrdinalMap compose(const OrdinalMap& outer, const OrdinalMap& inner);
/// maps[0] ∘ maps[1] ∘ ... ∘ maps.back().
OrdinalMap compose(const std::vector<OrdinalMap>& maps);

/// ψ^k(w, i) = merge_k ∘ w ∘ skip_i. Requires w_i = k and w_{i+1} = k+1,
/// otherwise NotPerspectiveError.
Permutation psi_perm(std::size_t k, const Permutation& w, std::size_t i);
/// The (w, i) with ψ^k(w, i) = u.
std::pair<Permutation, std::size_t> psi_perm_inverse(std::size_t k, const Permutation& u);

/// ψ(v, k) = merge_k ∘ v ∘ skip_k. Requires k to be a split with v_k = k,
/// otherwise NotPerspectiveError.
BracketingVector psi_tamari(const BracketingVector& v, std::size_t k);
/// The (v, k) with ψ(v, k) = w.
std::pair<BracketingVector, std::size_t> psi_tamari_inverse(std::size_t k,
                                                            const BracketingVector& w);

/// The position where two words differ (first one), 0 if equal.
std::size_t first_difference(const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b);

/// All words with the given letter multiplicities, lexicographic.
std::vector<std::string> multinomial_words(const std::vector<std::size_t>& profile);

}  // namespace latder
