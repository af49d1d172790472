#pragma once

#include <utility>
#include <vector>

#include "latder/lattice.hpp"

namespace latder {

/// A partition of the elements of a lattice. Classes are sorted, and listed
/// by their least element.
struct Congruence {
    std::vector<std::vector<Elem>> classes;
    std::vector<std::size_t> class_of;

    bool same(Elem x, Elem y) const { return class_of.at(x) == class_of.at(y); }
};

/// Builds a partition from explicit classes. Throws InvalidArgumentError
/// unless the classes partition the elements; compatibility is not checked.
Congruence partition_from_classes(const FiniteLattice& lattice,
                                  std::vector<std::vector<Elem>> classes);

Congruence identity_congruence(const FiniteLattice& lattice);
Congruence full_congruence(const FiniteLattice& lattice);

/// The least congruence identifying each given pair. Throws IndexError.
Congruence congruence_generated(const FiniteLattice& lattice,
                                const std::vector<std::pair<Elem, Elem>>& pairs);

/// x ≡ y implies x ∧ z ≡ y ∧ z and x ∨ z ≡ y ∨ z for every z.
bool is_congruence(const FiniteLattice& lattice, const Congruence& theta);

/// μ_θ(x) = ⋁{ j ∈ J(L) | j <= x, (j_*, j) ∉ θ }, the least element of [x].
/// Throws NotACongruenceError if the formula disagrees with the class
/// minimum.
Elem mu_min(const FiniteLattice& lattice, const Congruence& theta, Elem x);

/// The lattice on { μ_θ(x) } with the induced order, ids ascending.
/// Throws NotACongruenceError unless θ is a congruence.
FiniteLattice quotient(const FiniteLattice& lattice, const Congruence& theta);

/// The μ-representatives, ascending; the quotient's element i is reps[i].
std::vector<Elem> quotient_representatives(const FiniteLattice& lattice,
                                           const Congruence& theta);

}  // namespace latder
