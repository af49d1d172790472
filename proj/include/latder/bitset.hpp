#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace latder {

/// Fixed-size dynamic bitset over the ids 0..size-1.
class BitSet {
public:
    BitSet() = default;
    explicit BitSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void set_all() noexcept;

    std::size_t count() const noexcept;
    bool any() const noexcept;
    bool none() const noexcept { return !any(); }

    /// True iff every bit of *this is also set in other.
    bool is_subset_of(const BitSet& other) const noexcept;
    bool intersects(const BitSet& other) const noexcept;

    BitSet& operator&=(const BitSet& other) noexcept;
    BitSet& operator|=(const BitSet& other) noexcept;
    BitSet& subtract(const BitSet& other) noexcept;

    friend BitSet operator&(BitSet a, const BitSet& b) noexcept { return a &= b; }
    friend BitSet operator|(BitSet a, const BitSet& b) noexcept { return a |= b; }
    friend bool operator==(const BitSet&, const BitSet&) = default;
    friend auto operator<=>(const BitSet&, const BitSet&) = default;

    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t next(std::size_t from) const noexcept;
    std::size_t first() const noexcept { return next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(word));
                f(w * 64 + bit);
                word &= word - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const;
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Square boolean matrix stored row-wise as bitsets.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : rows_(n, BitSet(n)) {}

    std::size_t size() const noexcept { return rows_.size(); }
    bool test(std::size_t i, std::size_t j) const noexcept { return rows_[i].test(j); }
    void set(std::size_t i, std::size_t j) noexcept { rows_[i].set(j); }
    void reset(std::size_t i, std::size_t j) noexcept { rows_[i].reset(j); }

    const BitSet& row(std::size_t i) const noexcept { return rows_[i]; }
    BitSet& row(std::size_t i) noexcept { return rows_[i]; }

    BitMatrix transposed() const;
    /// Warshall closure in place; reflexive pairs are not added.
    void close_transitively();
    std::size_t count() const noexcept;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::vector<BitSet> rows_;
};

}  // namespace latder
