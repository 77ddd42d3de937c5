#include "pbu/bit_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace pbu {

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_)
        throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

bool BitVector::any() const
{
    for (auto w : words_)
        if (w)
            return true;
    return false;
}

std::size_t BitVector::count() const
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::first_set() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
}

bool BitVector::dot(const BitVector& other) const
{
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

BitVector BitVector::from_support(std::size_t size, const std::vector<std::size_t>& support)
{
    BitVector v(size);
    for (auto i : support)
        v.flip(i);
    return v;
}

Z2Matrix Z2Matrix::identity(std::size_t n)
{
    Z2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

Z2Matrix Z2Matrix::from_columns(std::size_t rows, const std::vector<BitVector>& columns)
{
    Z2Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (auto r : columns[c].support())
            m.set(r, c);
    return m;
}

BitVector Z2Matrix::column(std::size_t c) const
{
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c))
            v.set(r);
    return v;
}

Z2Matrix Z2Matrix::transpose() const
{
    Z2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto c : data_[r].support())
            t.set(c, r);
    return t;
}

Z2Matrix Z2Matrix::operator*(const Z2Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("Z2Matrix product shape mismatch");
    Z2Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto k : data_[r].support())
            out.data_[r] ^= rhs.data_[k];
    return out;
}

BitVector Z2Matrix::operator*(const BitVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("Z2Matrix-vector shape mismatch");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].dot(v))
            out.set(r);
    return out;
}

bool Z2Matrix::is_zero() const
{
    for (const auto& row : data_)
        if (row.any())
            return false;
    return true;
}

std::vector<std::size_t> Z2Matrix::reduce_to_rref()
{
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols_ && next_row < rows_; ++c) {
        std::size_t pivot = next_row;
        while (pivot < rows_ && !data_[pivot].get(c))
            ++pivot;
        if (pivot == rows_)
            continue;
        std::swap(data_[pivot], data_[next_row]);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != next_row && data_[r].get(c))
                data_[r] ^= data_[next_row];
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

std::size_t Z2Matrix::rank() const
{
    Z2Matrix copy = *this;
    return copy.reduce_to_rref().size();
}

std::vector<BitVector> Z2Matrix::kernel_basis() const
{
    Z2Matrix r = *this;
    const auto pivots = r.reduce_to_rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        BitVector x(cols_);
        x.set(free);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (r.get(i, free))
                x.set(pivots[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<BitVector> Z2Matrix::solve(const BitVector& b) const
{
    if (b.size() != rows_)
        throw std::invalid_argument("Z2Matrix::solve shape mismatch");
    // Augment with b as an extra column.
    Z2Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (auto c : data_[r].support())
            aug.set(r, c);
        if (b.get(r))
            aug.set(r, cols_);
    }
    const auto pivots = aug.reduce_to_rref();
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt;
    BitVector x(cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (aug.get(i, cols_))
            x.set(pivots[i]);
    return x;
}

std::string Z2Matrix::to_string() const
{
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

}  // namespace pbu
