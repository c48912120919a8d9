#include "gbcodex/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gbcodex {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

BitVector BitVector::from_support(std::size_t size, const std::vector<std::size_t>& ones) {
    BitVector v(size);
    for (std::size_t i : ones) {
        if (i >= size) {
            throw std::out_of_range("bit index outside vector");
        }
        v.flip(i);
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

std::size_t BitVector::weight() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("vector length mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

bool dot(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector length mismatch");
    }
    unsigned parity = 0;
    const auto aw = a.words();
    const auto bw = b.words();
    for (std::size_t w = 0; w < aw.size(); ++w) {
        parity ^= std::popcount(aw[w] & bw[w]) & 1U;
    }
    return parity != 0;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, const std::vector<BitVector>& rows) {
    BitMatrix m;
    m.cols_ = cols;
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("row length mismatch");
        }
    }
    m.rows_ = rows;
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        v.set(r, get(r, c));
    }
    return v;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.is_zero(); });
}

BitMatrix circulant(const BinaryPolynomial& p, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("circulant size must be positive");
    }
    if (const auto d = p.degree(); d && *d >= n) {
        throw std::invalid_argument("polynomial too wide");
    }
    BitMatrix m(n, n);
    for (std::size_t e : p.support()) {
        for (std::size_t j = 0; j < n; ++j) {
            m.set((e + j) % n, j, true);
        }
    }
    return m;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("hstack: row count mismatch");
    }
    BitMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c : a.row(r).support()) {
            out.set(r, c, true);
        }
        for (std::size_t c : b.row(r).support()) {
            out.set(r, a.cols() + c, true);
        }
    }
    return out;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c : m.row(r).support()) {
            out.set(c, r, true);
        }
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: dimension mismatch");
    }
    std::vector<BitVector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector acc(b.cols());
        for (std::size_t k : a.row(r).support()) {
            acc ^= b.row(k);
        }
        rows.push_back(std::move(acc));
    }
    return BitMatrix::from_rows(b.cols(), rows);
}

BitVector mat_vec(const BitMatrix& m, const BitVector& v) {
    if (m.cols() != v.size()) {
        throw std::invalid_argument("mat_vec: dimension mismatch");
    }
    BitVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out.set(r, dot(m.row(r), v));
    }
    return out;
}

namespace {

struct Reduced {
    std::vector<BitVector> rows;        // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;    // pivot column of each row
};

Reduced reduced_row_echelon(const BitMatrix& m) {
    std::vector<BitVector> rows = m.row_vectors();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && !rows[p].get(c)) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    return {std::move(rows), std::move(pivots)};
}

}  // namespace

std::size_t rank(const BitMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    const Reduced red = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivots) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(free, true);
        for (std::size_t r = 0; r < red.rows.size(); ++r) {
            if (red.rows[r].get(free)) {
                v.set(red.pivots[r], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool row_space_contains(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("row_space_contains: vector length mismatch");
    }
    EchelonBasis basis(m.cols());
    for (const auto& r : m.row_vectors()) {
        basis.insert(r);
    }
    return basis.contains(v);
}

BitVector EchelonBasis::reduce(BitVector v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("echelon reduce: vector length mismatch");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return v;
}

bool EchelonBasis::insert(const BitVector& v) {
    BitVector r = reduce(v);
    const auto sup = r.support();
    if (sup.empty()) {
        return false;
    }
    const std::size_t pivot = sup.front();
    // Keep existing rows free of the new pivot so reduce() stays one pass.
    for (auto& row : rows_) {
        if (row.get(pivot)) {
            row ^= r;
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace gbcodex
