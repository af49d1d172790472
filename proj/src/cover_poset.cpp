#include "latder/cover_poset.hpp"

#include <algorithm>
#include <string>

#include "latder/errors.hpp"

namespace latder {

namespace {

std::string show(const FiniteLattice& lattice, Cover c) {
    return "(" + lattice.name(c.lo) + "," + lattice.name(c.hi) + ")";
}

}  // namespace

void check_cover(const FiniteLattice& lattice, Cover c) {
    if (c.lo >= lattice.size() || c.hi >= lattice.size() || !lattice.is_cover(c.lo, c.hi)) {
        throw InvalidCoverError("(" + std::to_string(c.lo) + "," + std::to_string(c.hi) +
                                ") is not a cover");
    }
}

bool cover_leq(const FiniteLattice& lattice, Cover gamma, Cover delta) {
    return lattice.leq(gamma.lo, delta.lo) && !lattice.leq(gamma.hi, delta.lo) &&
           lattice.leq(gamma.hi, delta.hi);
}

CoverPoset::CoverPoset(std::shared_ptr<const FiniteLattice> base) : base_(std::move(base)) {
    const FiniteLattice& lat = *base_;
    for (const auto& e : lat.hasse()) {
        covers_.push_back({e.lo, e.hi});
    }
    // hasse() is already sorted lexicographically.
    by_lo_.assign(lat.size(), {});
    for (CoverIndex i = 0; i < covers_.size(); ++i) {
        by_lo_[covers_[i].lo].emplace_back(covers_[i].hi, i);
    }
    const std::size_t m = covers_.size();
    BitMatrix order(m);
    for (CoverIndex a = 0; a < m; ++a) {
        for (CoverIndex b = 0; b < m; ++b) {
            if (cover_leq(lat, covers_[a], covers_[b])) {
                order.set(a, b);
            }
        }
    }
    std::vector<std::string> names;
    names.reserve(m);
    for (const auto& c : covers_) {
        names.push_back(show(lat, c));
    }
    poset_ = FinitePoset::from_order(std::move(order), std::move(names));
}

std::optional<CoverIndex> CoverPoset::index_of(Cover c) const {
    if (c.lo >= by_lo_.size()) {
        return std::nullopt;
    }
    for (const auto& [hi, idx] : by_lo_[c.lo]) {
        if (hi == c.hi) {
            return idx;
        }
    }
    return std::nullopt;
}

CoverIndex CoverPoset::require_index(Cover c) const {
    if (auto idx = index_of(c)) {
        return *idx;
    }
    throw InvalidCoverError("(" + std::to_string(c.lo) + "," + std::to_string(c.hi) +
                            ") is not a cover");
}

std::string CoverPoset::label(CoverIndex i) const {
    return show(*base_, covers_.at(i));
}

CoverPoset cover_poset(const FiniteLattice& lattice) {
    return CoverPoset(std::make_shared<const FiniteLattice>(lattice));
}

std::vector<Cover> pushdown_steps(const FiniteLattice& lattice, Cover delta, Elem u) {
    check_cover(lattice, delta);
    if (u >= lattice.size() || u == delta.lo || !lattice.is_cover(u, delta.hi)) {
        throw NotALowerCoverError("element " + std::to_string(u) +
                                  " is not a lower cover of " + std::to_string(delta.hi) +
                                  " distinct from " + std::to_string(delta.lo));
    }
    const Elem lo = lattice.meet(u, delta.lo);
    std::vector<Cover> out;
    for (Elem hi : lattice.upper_covers(lo)) {
        if (lattice.leq(hi, u)) {
            out.push_back({lo, hi});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cover> pushup_steps(const FiniteLattice& lattice, Cover gamma, Elem w) {
    check_cover(lattice, gamma);
    if (w >= lattice.size() || w == gamma.hi || !lattice.is_cover(gamma.lo, w)) {
        throw NotAnUpperCoverError("element " + std::to_string(w) +
                                   " is not an upper cover of " + std::to_string(gamma.lo) +
                                   " distinct from " + std::to_string(gamma.hi));
    }
    const Elem hi = lattice.join(w, gamma.hi);
    std::vector<Cover> out;
    for (Elem lo : lattice.lower_covers(hi)) {
        if (lattice.leq(w, lo)) {
            out.push_back({lo, hi});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PushStep> pushdown_relation(const FiniteLattice& lattice) {
    std::vector<PushStep> out;
    for (const auto& e : lattice.hasse()) {
        const Cover delta{e.lo, e.hi};
        for (Elem u : lattice.lower_covers(delta.hi)) {
            if (u == delta.lo) {
                continue;
            }
            for (const Cover& gamma : pushdown_steps(lattice, delta, u)) {
                out.push_back({delta, u, gamma, PushDirection::down});
            }
        }
    }
    return out;
}

std::vector<PushStep> pushup_relation(const FiniteLattice& lattice) {
    std::vector<PushStep> out;
    for (const auto& e : lattice.hasse()) {
        const Cover gamma{e.lo, e.hi};
        for (Elem w : lattice.upper_covers(gamma.lo)) {
            if (w == gamma.hi) {
                continue;
            }
            for (const Cover& delta : pushup_steps(lattice, gamma, w)) {
                out.push_back({gamma, w, delta, PushDirection::up});
            }
        }
    }
    return out;
}

bool is_pushdown(const CoverPoset& cp) {
    const FiniteLattice& lat = cp.base();
    for (CoverIndex d = 0; d < cp.size(); ++d) {
        const auto below = cp.poset().down(static_cast<Elem>(d)).to_vector();
        for (CoverIndex g : below) {
            for (CoverIndex e : below) {
                if (lat.leq(cp.cover(g).lo, cp.cover(e).lo) && !cp.leq(g, e)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_pushdown(const FiniteLattice& lattice) {
    return is_pushdown(cover_poset(lattice));
}

bool is_pushup(const CoverPoset& cp) {
    const FiniteLattice& lat = cp.base();
    for (CoverIndex d = 0; d < cp.size(); ++d) {
        const auto above = cp.poset().up(static_cast<Elem>(d)).to_vector();
        for (CoverIndex g : above) {
            for (CoverIndex e : above) {
                if (lat.leq(cp.cover(e).hi, cp.cover(g).hi) && !cp.leq(e, g)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_pushup(const FiniteLattice& lattice) {
    return is_pushup(cover_poset(lattice));
}

std::optional<std::vector<PushStep>> pushdown_path(const CoverPoset& cp, Cover delta,
                                                   Cover gamma) {
    const FiniteLattice& lat = cp.base();
    const CoverIndex target = cp.require_index(gamma);
    CoverIndex current = cp.require_index(delta);
    if (!is_pushdown(cp)) {
        throw NotPushdownError("pushdown paths require a pushdown lattice");
    }
    if (!cp.leq(target, current)) {
        return std::nullopt;
    }
    std::vector<PushStep> path;
    while (current != target) {
        const Cover from = cp.cover(current);
        // lower_covers is ascending, so this picks the lowest-index pusher.
        std::optional<Elem> pusher;
        for (Elem u : lat.lower_covers(from.hi)) {
            if (lat.leq(gamma.hi, u)) {
                pusher = u;
                break;
            }
        }
        // γ < current forces γ1 < current1, so some lower cover lies above γ1.
        const auto next = pushdown_steps(lat, from, *pusher);
        const Cover to = next.front();
        path.push_back({from, *pusher, to, PushDirection::down});
        current = cp.require_index(to);
    }
    return path;
}

CoverComponents cover_components(const CoverPoset& cp) {
    CoverComponents out;
    out.component_of.assign(cp.size(), 0);
    for (const auto& comp : components(cp.poset())) {
        std::vector<CoverIndex> part(comp.elements.begin(), comp.elements.end());
        for (CoverIndex i : part) {
            out.component_of[i] = out.parts.size();
        }
        out.parts.push_back(std::move(part));
    }
    return out;
}

}  // namespace latder
