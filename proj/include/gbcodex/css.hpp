#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "gbcodex/bitmatrix.hpp"

namespace gbcodex {

enum class Side { X, Z };

/// Thrown by exhaustive_distance when the kernel exceeds the enumeration cap.
class KernelTooLarge : public std::runtime_error {
public:
    KernelTooLarge(std::size_t dimension, std::size_t cap);
    std::size_t dimension() const { return dimension_; }

private:
    std::size_t dimension_;
};

struct ExhaustiveResult {
    // Empty when no logical operator exists (k = 0): the distance is infinite.
    std::optional<std::size_t> distance;
    BitVector witness;
    std::size_t kernel_dimension = 0;
};

struct ExhaustiveOptions {
    std::size_t kernel_cap = 26;
    // 0 picks the worker count from GBCODEX_THREADS or the hardware.
    unsigned threads = 0;
};

/// Validated CSS pair: equal widths and H_X H_Z^T = 0.
class CssCode {
public:
    /// Throws std::invalid_argument with "shape mismatch" or "not orthogonal".
    CssCode(BitMatrix h_x, BitMatrix h_z);

    const BitMatrix& h_x() const { return h_x_; }
    const BitMatrix& h_z() const { return h_z_; }
    std::size_t length() const { return h_x_.cols(); }

    std::size_t rank_x() const { return rank_x_; }
    std::size_t rank_z() const { return rank_z_; }
    std::size_t dimension() const { return length() - rank_x_ - rank_z_; }

    /// In ker H_X and outside rs(H_Z).
    bool is_logical_x(const BitVector& v) const;
    /// In ker H_Z and outside rs(H_X).
    bool is_logical_z(const BitVector& v) const;
    bool is_logical(Side side, const BitVector& v) const {
        return side == Side::X ? is_logical_x(v) : is_logical_z(v);
    }

    /// Minimum weight of a side-logical operator by full kernel enumeration.
    ExhaustiveResult exhaustive_distance(Side side, const ExhaustiveOptions& options = {}) const;

    std::size_t kernel_dimension(Side side) const {
        return length() - (side == Side::X ? rank_x_ : rank_z_);
    }

private:
    BitMatrix h_x_;
    BitMatrix h_z_;
    std::size_t rank_x_ = 0;
    std::size_t rank_z_ = 0;
};

/// Workers to use: GBCODEX_THREADS when set and positive, else hardware concurrency.
unsigned default_thread_count();

}  // namespace gbcodex
