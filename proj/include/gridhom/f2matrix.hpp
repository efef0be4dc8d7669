#pragma once
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace gridhom {

// Dense GF(2) matrix with 64-bit packed rows; enough for the slice sizes we
// touch (reduction happens first, so slices stay small).
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(size_t r, size_t c, bool v) {
        uint64_t mask = uint64_t(1) << (c & 63);
        if (v)
            row(r)[c >> 6] |= mask;
        else
            row(r)[c >> 6] &= ~mask;
    }
    void flip(size_t r, size_t c) { row(r)[c >> 6] ^= uint64_t(1) << (c & 63); }

    void xor_row(size_t dst, size_t src) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }

    size_t rank() const {
        F2Matrix m = *this;
        return m.reduce_in_place();
    }

    // Row-reduce; returns rank. Pivot columns left in pivot_cols if requested.
    size_t reduce_in_place(std::vector<size_t>* pivot_cols = nullptr) {
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t p = r;
            while (p < rows_ && !get(p, c)) ++p;
            if (p == rows_) continue;
            swap_rows(p, r);
            for (size_t i = 0; i < rows_; ++i)
                if (i != r && get(i, c)) xor_row(i, r);
            if (pivot_cols) pivot_cols->push_back(c);
            ++r;
        }
        return r;
    }

    // Basis of the null space (as rows of the returned matrix).
    F2Matrix kernel_basis() const {
        F2Matrix m = *this;
        std::vector<size_t> piv;
        m.reduce_in_place(&piv);
        std::vector<char> is_piv(cols_, 0);
        for (size_t c : piv) is_piv[c] = 1;
        size_t nfree = cols_ - piv.size();
        F2Matrix k(nfree, cols_);
        size_t ki = 0;
        for (size_t c = 0; c < cols_; ++c) {
            if (is_piv[c]) continue;
            k.set(ki, c, true);
            for (size_t r = 0; r < piv.size(); ++r)
                if (m.get(r, c)) k.set(ki, piv[r], true);
            ++ki;
        }
        return k;
    }

    // A * B with B given row-major (this: rows_ x cols_, o: cols_ x o.cols_)
    F2Matrix multiply(const F2Matrix& o) const {
        if (cols_ != o.rows_) throw SizeMismatch("matrix product shapes");
        F2Matrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            const uint64_t* a = row(i);
            for (size_t w = 0; w < words_; ++w) {
                uint64_t bits = a[w];
                while (bits) {
                    size_t j = w * 64 + static_cast<size_t>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    r.xor_into_row(i, o.row(j));
                }
            }
        }
        return r;
    }

    F2Matrix transposed() const {
        F2Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i) {
            const uint64_t* a = row(i);
            for (size_t w = 0; w < words_; ++w) {
                uint64_t bits = a[w];
                while (bits) {
                    size_t j = w * 64 + (size_t)__builtin_ctzll(bits);
                    bits &= bits - 1;
                    r.set(j, i, true);
                }
            }
        }
        return r;
    }

    // Stack other below this (same column count).
    F2Matrix stacked(const F2Matrix& below) const {
        if (cols_ != below.cols_) throw SizeMismatch("stack column counts");
        F2Matrix r(rows_ + below.rows_, cols_);
        std::copy(data_.begin(), data_.end(), r.data_.begin());
        std::copy(below.data_.begin(), below.data_.end(), r.data_.begin() + rows_ * words_);
        return r;
    }

    const uint64_t* row(size_t r) const { return data_.data() + r * words_; }
    uint64_t* row(size_t r) { return data_.data() + r * words_; }

  private:
    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t w = 0; w < words_; ++w) std::swap(row(a)[w], row(b)[w]);
    }
    void xor_into_row(size_t dst, const uint64_t* src) {
        uint64_t* d = row(dst);
        for (size_t w = 0; w < words_; ++w) d[w] ^= src[w];
    }

    size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

// dim(image of A) + checks like "is x in row space" fall out of rank calls:
inline bool in_row_space(const F2Matrix& a, const F2Matrix& x_row) {
    return a.stacked(x_row).rank() == a.rank();
}

} // namespace gridhom
