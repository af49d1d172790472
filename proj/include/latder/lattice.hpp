#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latder/poset.hpp"

namespace latder {

/// A finite lattice: a validated poset plus precomputed meet and join tables.
///
/// Construction checks exhaustively that every pair has a greatest lower
/// bound and a least upper bound. Values are immutable afterwards.
class FiniteLattice {
public:
    FiniteLattice() = default;

    /// Throws NotLatticeError if some pair lacks a meet or join, or if the
    /// poset is empty.
    static FiniteLattice from_poset(FinitePoset poset);

    const FinitePoset& poset() const noexcept { return poset_; }
    std::size_t size() const noexcept { return poset_.size(); }

    bool leq(Elem x, Elem y) const noexcept { return poset_.leq(x, y); }
    bool less(Elem x, Elem y) const noexcept { return poset_.less(x, y); }
    bool is_cover(Elem lo, Elem hi) const { return poset_.is_cover(lo, hi); }

    /// Table lookups; throw IndexError on bad ids.
    Elem meet(Elem x, Elem y) const;
    Elem join(Elem x, Elem y) const;

    Elem bottom() const noexcept { return bottom_; }
    Elem top() const noexcept { return top_; }

    const std::vector<Edge>& hasse() const noexcept { return poset_.hasse(); }
    const std::vector<Elem>& upper_covers(Elem x) const { return poset_.upper_covers(x); }
    const std::vector<Elem>& lower_covers(Elem x) const { return poset_.lower_covers(x); }
    std::string name(Elem x) const { return poset_.name(x); }

private:
    FinitePoset poset_;
    std::vector<Elem> meet_;
    std::vector<Elem> join_;
    Elem bottom_ = 0;
    Elem top_ = 0;
};

/// Validating constructor from a transitively reduced cover list.
FiniteLattice build_lattice(std::size_t size, std::vector<Edge> hasse,
                            std::vector<std::string> names = {});

/// Lenient loader: reduces an arbitrary acyclic edge list first.
FiniteLattice build_lattice_lenient(std::size_t size, const std::vector<Edge>& edges,
                                    std::vector<std::string> names = {});

/// Order reversed, meet and join swapped; element ids are preserved.
FiniteLattice dualize(const FiniteLattice& lattice);

struct IrreduciblePair {
    Elem element = 0;
    Elem partner = 0;  // j_* for join-irreducibles, m^* for meet-irreducibles

    friend auto operator<=>(const IrreduciblePair&, const IrreduciblePair&) = default;
};

/// Join- and meet-irreducible elements with their unique lower/upper cover.
class Irreducibles {
public:
    explicit Irreducibles(const FiniteLattice& lattice);

    const std::vector<IrreduciblePair>& join_irreducibles() const noexcept { return join_irr_; }
    const std::vector<IrreduciblePair>& meet_irreducibles() const noexcept { return meet_irr_; }

    bool is_join_irreducible(Elem x) const { return x < lower_star_.size() && lower_star_[x] != kNone; }
    bool is_meet_irreducible(Elem x) const { return x < upper_star_.size() && upper_star_[x] != kNone; }

    /// j_*; throws NotIrreducibleError unless j is join-irreducible.
    Elem lower_star(Elem j) const;
    /// m^*; throws NotIrreducibleError unless m is meet-irreducible.
    Elem upper_star(Elem m) const;

private:
    static constexpr Elem kNone = static_cast<Elem>(-1);

    std::vector<IrreduciblePair> join_irr_;
    std::vector<IrreduciblePair> meet_irr_;
    std::vector<Elem> lower_star_;
    std::vector<Elem> upper_star_;
};

Irreducibles irreducibles(const FiniteLattice& lattice);

enum class Arrow { none, up, down, both };

std::string to_string(Arrow arrow);

/// Arrow relation between j in J(L) and m in M(L): up iff j <= m^* and
/// j !<= m; down iff j_* <= m and j !<= m; both when both hold.
Arrow arrows(const FiniteLattice& lattice, const Irreducibles& irr, Elem j, Elem m);
Arrow arrows(const FiniteLattice& lattice, Elem j, Elem m);

inline bool has_up(Arrow a) noexcept { return a == Arrow::up || a == Arrow::both; }
inline bool has_down(Arrow a) noexcept { return a == Arrow::down || a == Arrow::both; }

}  // namespace latder
