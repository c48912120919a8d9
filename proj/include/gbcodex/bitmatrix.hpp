#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gbcodex/gf2poly.hpp"

namespace gbcodex {

/// Fixed-length GF(2) vector, 64 bits per word.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size);
    static BitVector from_support(std::size_t size, const std::vector<std::size_t>& ones);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    std::size_t weight() const;
    bool is_zero() const;
    std::vector<std::size_t> support() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// GF(2) inner product.
bool dot(const BitVector& a, const BitVector& b);

/// Dense row-major GF(2) matrix. All operations leave their inputs untouched.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::size_t cols, const std::vector<BitVector>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value) { rows_[r].set(c, value); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    const std::vector<BitVector>& row_vectors() const { return rows_; }

    BitVector column(std::size_t c) const;
    bool is_zero() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// n x n circulant with entry (i, j) = a_{(i - j) mod n}: the first column is the
/// coefficient vector and column j is that column shifted down by j.
/// Throws std::invalid_argument("polynomial too wide") when deg p >= n.
BitMatrix circulant(const BinaryPolynomial& p, std::size_t n);

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& m);
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitVector mat_vec(const BitMatrix& m, const BitVector& v);

std::size_t rank(const BitMatrix& m);

/// Basis of {v : m v = 0}; has cols - rank(m) elements.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// True iff v is a GF(2) combination of the rows of m.
bool row_space_contains(const BitMatrix& m, const BitVector& v);

/// Incremental reduced basis of a subspace of GF(2)^cols.
///
/// Rows are kept with distinct pivot columns, which makes membership tests a
/// single reduction pass instead of a fresh elimination.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<BitVector>& rows() const { return rows_; }

    // Reduces v against the basis; zero iff v lies in the span.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
    // Returns true when v was independent and got added.
    bool insert(const BitVector& v);

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace gbcodex
