#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pbu {

/// Fixed-length vector over GF(2), packed 64 bits per word.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true)
    {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector& other) const = default;

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;
    /// Index of the lowest set bit, or size() when empty.
    std::size_t first_set() const;
    /// Parity of the AND of two vectors (the GF(2) dot product).
    bool dot(const BitVector& other) const;

    std::vector<std::size_t> support() const;
    static BitVector from_support(std::size_t size, const std::vector<std::size_t>& support);

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense rows x cols matrix over GF(2), stored row-major as packed bit rows.
class Z2Matrix {
public:
    Z2Matrix() = default;
    Z2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    static Z2Matrix identity(std::size_t n);
    static Z2Matrix from_columns(std::size_t rows, const std::vector<BitVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

    const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector column(std::size_t c) const;

    Z2Matrix transpose() const;
    Z2Matrix operator*(const Z2Matrix& rhs) const;
    BitVector operator*(const BitVector& v) const;
    bool operator==(const Z2Matrix& other) const = default;

    bool is_zero() const;

    /// Rank by Gauss-Jordan elimination on a copy.
    std::size_t rank() const;

    /// Reduced row echelon form in place; returns the pivot column of each nonzero row.
    std::vector<std::size_t> reduce_to_rref();

    /// Basis of the null space {x : A x = 0}, one vector per free column (ascending).
    std::vector<BitVector> kernel_basis() const;

    /// Some x with A x = b, or nullopt if b is outside the column space.
    std::optional<BitVector> solve(const BitVector& b) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

}  // namespace pbu
