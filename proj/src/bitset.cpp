#include "latder/bitset.hpp"

namespace latder {

void BitSet::set_all() noexcept {
    for (auto& w : words_) {
        w = ~std::uint64_t{0};
    }
    if (const std::size_t tail = size_ & 63; tail != 0) {
        words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
}

std::size_t BitSet::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool BitSet::any() const noexcept {
    for (auto w : words_) {
        if (w != 0) {
            return true;
        }
    }
    return false;
}

bool BitSet::is_subset_of(const BitSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool BitSet::intersects(const BitSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

BitSet& BitSet::operator&=(const BitSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

BitSet& BitSet::operator|=(const BitSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

BitSet& BitSet::subtract(const BitSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

std::size_t BitSet::next(std::size_t from) const noexcept {
    if (from >= size_) {
        return size_;
    }
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (word != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        }
        if (++w == words_.size()) {
            return size_;
        }
        word = words_[w];
    }
}

std::vector<std::size_t> BitSet::to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(size());
    for (std::size_t i = 0; i < size(); ++i) {
        rows_[i].for_each([&](std::size_t j) { t.set(j, i); });
    }
    return t;
}

void BitMatrix::close_transitively() {
    const std::size_t n = size();
    for (std::size_t k = 0; k < n; ++k) {
        const BitSet through = rows_[k];
        for (std::size_t i = 0; i < n; ++i) {
            if (rows_[i].test(k)) {
                rows_[i] |= through;
            }
        }
    }
}

std::size_t BitMatrix::count() const noexcept {
    std::size_t n = 0;
    for (const auto& r : rows_) {
        n += r.count();
    }
    return n;
}

}  // namespace latder
