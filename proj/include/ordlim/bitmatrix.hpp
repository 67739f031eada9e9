#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ordlim {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline bool test_bit(std::span<const Word> row, std::size_t j)
{
    return (row[j >> 6] >> (j & 63)) & 1U;
}

inline void set_bit(std::span<Word> row, std::size_t j) { row[j >> 6] |= Word{1} << (j & 63); }

inline void clear_bit(std::span<Word> row, std::size_t j)
{
    row[j >> 6] &= ~(Word{1} << (j & 63));
}

inline std::size_t popcount(std::span<const Word> row)
{
    std::size_t c = 0;
    for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

/// Calls fn(j) for every set bit j, ascending.
template <typename Fn>
void for_each_bit(std::span<const Word> row, Fn&& fn)
{
    for (std::size_t w = 0; w < row.size(); ++w) {
        Word bits = row[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            fn(w * 64 + static_cast<std::size_t>(b));
            bits &= bits - 1;
        }
    }
}

/// Square n x n boolean matrix with bit-packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_(words_for(n)), data_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words() const { return words_; }

    bool test(std::size_t i, std::size_t j) const { return test_bit(row(i), j); }
    void set(std::size_t i, std::size_t j) { set_bit(row(i), j); }
    void clear(std::size_t i, std::size_t j) { clear_bit(row(i), j); }

    std::span<const Word> row(std::size_t i) const { return {data_.data() + i * words_, words_}; }
    std::span<Word> row(std::size_t i) { return {data_.data() + i * words_, words_}; }

    BitMatrix transposed() const
    {
        BitMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for_each_bit(row(i), [&](std::size_t j) { t.set(j, i); });
        return t;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (Word w : data_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> data_;
};

}  // namespace ordlim
