#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latder/bitset.hpp"
#include "latder/lattice.hpp"

namespace latder {

/// A covering pair lo ⋖ hi of some host lattice.
struct Cover {
    Elem lo = 0;
    Elem hi = 0;

    friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// Index into the canonical (lexicographically sorted) cover sequence.
using CoverIndex = std::size_t;

enum class PushDirection { down, up };

/// One rewriting step: from ⇘_along to (down) or from ⇗_along to (up).
struct PushStep {
    Cover from;
    Elem along = 0;
    Cover to;
    PushDirection direction = PushDirection::down;

    friend bool operator==(const PushStep&, const PushStep&) = default;
};

/// Throws InvalidCoverError unless c is a cover of the lattice.
void check_cover(const FiniteLattice& lattice, Cover c);

/// Perspectivity order: γ <= δ iff γ0 <= δ0, γ1 !<= δ0 and γ1 <= δ1.
bool cover_leq(const FiniteLattice& lattice, Cover gamma, Cover delta);

/// Cov(L) ordered by perspectivity, with the order stored as a bit-matrix
/// over cover indices.
class CoverPoset {
public:
    explicit CoverPoset(std::shared_ptr<const FiniteLattice> base);

    const FiniteLattice& base() const noexcept { return *base_; }
    const std::shared_ptr<const FiniteLattice>& base_ptr() const noexcept { return base_; }

    std::size_t size() const noexcept { return covers_.size(); }
    const std::vector<Cover>& covers() const noexcept { return covers_; }
    const Cover& cover(CoverIndex i) const { return covers_.at(i); }

    std::optional<CoverIndex> index_of(Cover c) const;
    /// Throws InvalidCoverError if c is not a cover of the base.
    CoverIndex require_index(Cover c) const;

    bool leq(CoverIndex a, CoverIndex b) const noexcept { return poset_.leq(static_cast<Elem>(a), static_cast<Elem>(b)); }
    /// Cov(L) as a plain poset over cover indices.
    const FinitePoset& poset() const noexcept { return poset_; }

    std::string label(CoverIndex i) const;

private:
    std::shared_ptr<const FiniteLattice> base_;
    std::vector<Cover> covers_;
    std::vector<std::vector<std::pair<Elem, CoverIndex>>> by_lo_;
    FinitePoset poset_;
};

CoverPoset cover_poset(const FiniteLattice& lattice);

/// All γ with δ ⇘_u γ. Throws NotALowerCoverError unless u ⋖ δ1 and u != δ0.
std::vector<Cover> pushdown_steps(const FiniteLattice& lattice, Cover delta, Elem u);

/// All δ with γ ⇗_w δ. Throws NotAnUpperCoverError unless γ0 ⋖ w and w != γ1.
std::vector<Cover> pushup_steps(const FiniteLattice& lattice, Cover gamma, Elem w);

/// Every instance of ⇘ (resp. ⇗) in the lattice, in deterministic order.
std::vector<PushStep> pushdown_relation(const FiniteLattice& lattice);
std::vector<PushStep> pushup_relation(const FiniteLattice& lattice);

/// pr0 : Cov(L) -> L is a Grothendieck fibration.
bool is_pushdown(const CoverPoset& covers);
bool is_pushdown(const FiniteLattice& lattice);
/// The dual property: δ <= γ, ε and ε1 <= γ1 imply ε <= γ.
bool is_pushup(const CoverPoset& covers);
bool is_pushup(const FiniteLattice& lattice);

/// A ⇘-path from δ down to γ when γ <= δ, nullopt otherwise.
/// Throws NotPushdownError when the base is not a pushdown lattice.
std::optional<std::vector<PushStep>> pushdown_path(const CoverPoset& covers, Cover delta,
                                                   Cover gamma);

struct CoverComponents {
    std::vector<std::vector<CoverIndex>> parts;
    std::vector<std::size_t> component_of;
};

CoverComponents cover_components(const CoverPoset& covers);

}  // namespace latder
