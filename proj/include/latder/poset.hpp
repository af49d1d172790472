#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latder/bitset.hpp"

namespace latder {

/// Element id inside a finite poset; ids are always 0..size-1.
using Elem = std::uint32_t;

/// A Hasse edge lo -> hi, i.e. lo is covered by hi.
struct Edge {
    Elem lo = 0;
    Elem hi = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable finite poset given by its Hasse diagram, with the full order
/// relation precomputed as a bit-matrix.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Strict constructor: `hasse` must be an acyclic, transitively reduced
    /// edge list. Throws IndexError, CycleError or NotReducedError.
    static FinitePoset from_hasse(std::size_t size, std::vector<Edge> hasse,
                                  std::vector<std::string> names = {});

    /// Lenient constructor: any acyclic edge list; the transitive reduction
    /// is computed. Throws IndexError or CycleError.
    static FinitePoset from_relations(std::size_t size, const std::vector<Edge>& edges,
                                      std::vector<std::string> names = {});

    /// From a reflexive order relation (leq(x,y) iff x <= y). The relation is
    /// closed transitively first; throws CycleError if it is not antisymmetric.
    static FinitePoset from_order(BitMatrix leq, std::vector<std::string> names = {});

    std::size_t size() const noexcept { return leq_.size(); }

    bool leq(Elem x, Elem y) const noexcept { return leq_.test(x, y); }
    bool less(Elem x, Elem y) const noexcept { return x != y && leq_.test(x, y); }
    bool comparable(Elem x, Elem y) const noexcept { return leq(x, y) || leq(y, x); }
    bool is_cover(Elem lo, Elem hi) const;

    const std::vector<Edge>& hasse() const noexcept { return hasse_; }
    const std::vector<Elem>& upper_covers(Elem x) const { return upper_[x]; }
    const std::vector<Elem>& lower_covers(Elem x) const { return lower_[x]; }

    /// Principal filter {y | x <= y} and ideal {y | y <= x}.
    const BitSet& up(Elem x) const { return leq_.row(x); }
    const BitSet& down(Elem x) const { return geq_.row(x); }
    const BitMatrix& order() const noexcept { return leq_; }

    bool has_names() const noexcept { return !names_.empty(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    /// Display name; falls back to the decimal id.
    std::string name(Elem x) const;

    /// Same ids, reversed order.
    FinitePoset dual() const;

    /// Sub-poset induced on `elements`; new id i stands for elements[i].
    FinitePoset induced(const std::vector<Elem>& elements) const;

    void check_index(Elem x) const;

private:
    static FinitePoset assemble(BitMatrix leq, std::vector<std::string> names);

    std::vector<Edge> hasse_;
    std::vector<std::vector<Elem>> upper_;
    std::vector<std::vector<Elem>> lower_;
    BitMatrix leq_;
    BitMatrix geq_;
    std::vector<std::string> names_;
};

/// Greatest lower bound of {x, y} in P, if it exists.
std::optional<Elem> poset_meet(const FinitePoset& poset, Elem x, Elem y);
/// Least upper bound of {x, y} in P, if it exists.
std::optional<Elem> poset_join(const FinitePoset& poset, Elem x, Elem y);

/// left ⋖ apex ⋗ right with left != right. Antihats are hats of the dual.
struct Hat {
    Elem left = 0;
    Elem apex = 0;
    Elem right = 0;

    friend auto operator<=>(const Hat&, const Hat&) = default;
};

/// Every hat with left < right, ordered by (apex, left, right).
std::vector<Hat> hats(const FinitePoset& poset);

enum class PullbackMode { all_cospans, hats_only };

/// True iff every cospan (every hat, in hats_only mode) has a pullback.
bool has_pullbacks(const FinitePoset& poset, PullbackMode mode);

struct PosetComponent {
    std::vector<Elem> elements;
    std::vector<Elem> minimal;
    std::vector<Elem> maximal;

    bool has_minimum() const noexcept { return minimal.size() == 1; }
    bool has_maximum() const noexcept { return maximal.size() == 1; }
};

/// Connected components of the comparability graph, ordered by least id.
std::vector<PosetComponent> components(const FinitePoset& poset);

/// Length (in edges) of the longest chain in the poset.
std::size_t height(const FinitePoset& poset);

}  // namespace latder
