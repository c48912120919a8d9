#include "gbcodex/css.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace gbcodex {

KernelTooLarge::KernelTooLarge(std::size_t dimension, std::size_t cap)
    : std::runtime_error("kernel too large: dimension " + std::to_string(dimension) + " exceeds cap " +
                         std::to_string(cap)),
      dimension_(dimension) {}

unsigned default_thread_count() {
    if (const char* env = std::getenv("GBCODEX_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

CssCode::CssCode(BitMatrix h_x, BitMatrix h_z) : h_x_(std::move(h_x)), h_z_(std::move(h_z)) {
    if (h_x_.cols() != h_z_.cols()) {
        throw std::invalid_argument("shape mismatch");
    }
    if (!mat_mul(h_x_, transpose(h_z_)).is_zero()) {
        throw std::invalid_argument("not orthogonal");
    }
    rank_x_ = rank(h_x_);
    rank_z_ = rank(h_z_);
}

bool CssCode::is_logical_x(const BitVector& v) const {
    if (v.size() != length()) {
        throw std::invalid_argument("is_logical_x: vector length mismatch");
    }
    return mat_vec(h_x_, v).is_zero() && !row_space_contains(h_z_, v);
}

bool CssCode::is_logical_z(const BitVector& v) const {
    if (v.size() != length()) {
        throw std::invalid_argument("is_logical_z: vector length mismatch");
    }
    return mat_vec(h_z_, v).is_zero() && !row_space_contains(h_x_, v);
}

namespace {

// Flat word storage for a list of equal-length vectors.
struct PackedBasis {
    std::size_t words = 0;
    std::vector<std::uint64_t> data;

    const std::uint64_t* at(std::size_t i) const { return data.data() + i * words; }
};

PackedBasis pack(const std::vector<BitVector>& vectors, std::size_t length) {
    PackedBasis b;
    b.words = (length + 63) / 64;
    b.data.reserve(vectors.size() * b.words);
    for (const auto& v : vectors) {
        const auto w = v.words();
        b.data.insert(b.data.end(), w.begin(), w.end());
    }
    return b;
}

struct Best {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    std::uint64_t job = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> vector;

    // Ties go to the lowest job index so the witness does not depend on scheduling.
    bool beats(const Best& other) const {
        return weight < other.weight || (weight == other.weight && job < other.job);
    }
};

// Gray-code sweep over all combinations of the first `free_bits` stabilizer
// generators, starting from `start`. Returns the lightest vector visited.
Best sweep(const PackedBasis& stabilizers, std::size_t free_bits, std::vector<std::uint64_t> current) {
    const std::size_t words = stabilizers.words;
    Best best;
    const auto weight_of = [&](const std::vector<std::uint64_t>& v) {
        std::size_t w = 0;
        for (std::uint64_t x : v) {
            w += std::popcount(x);
        }
        return w;
    };
    auto consider = [&](std::size_t w) {
        if (w < best.weight) {
            best.weight = w;
            best.vector = current;
        }
    };
    consider(weight_of(current));
    const std::uint64_t steps = std::uint64_t{1} << free_bits;
    if (words == 1) {
        std::uint64_t cur = current[0];
        std::size_t best_w = best.weight;
        std::uint64_t best_v = cur;
        const std::uint64_t* base = stabilizers.data.data();
        for (std::uint64_t i = 1; i < steps; ++i) {
            cur ^= base[std::countr_zero(i)];
            const auto w = static_cast<std::size_t>(std::popcount(cur));
            if (w < best_w) {
                best_w = w;
                best_v = cur;
            }
        }
        best.weight = best_w;
        best.vector = {best_v};
        return best;
    }
    for (std::uint64_t i = 1; i < steps; ++i) {
        const std::uint64_t* g = stabilizers.at(std::countr_zero(i));
        std::size_t w = 0;
        for (std::size_t k = 0; k < words; ++k) {
            current[k] ^= g[k];
            w += std::popcount(current[k]);
        }
        consider(w);
    }
    return best;
}

}  // namespace

ExhaustiveResult CssCode::exhaustive_distance(Side side, const ExhaustiveOptions& options) const {
    const BitMatrix& check = side == Side::X ? h_x_ : h_z_;
    const BitMatrix& stab = side == Side::X ? h_z_ : h_x_;

    const std::size_t kdim = kernel_dimension(side);
    if (kdim > options.kernel_cap) {
        throw KernelTooLarge(kdim, options.kernel_cap);
    }

    // Split ker(check) = span(stabilizer rows) + span(logical representatives).
    EchelonBasis span(length());
    std::vector<BitVector> stabilizers;
    for (const auto& r : stab.row_vectors()) {
        if (span.insert(r)) {
            stabilizers.push_back(r);
        }
    }
    std::vector<BitVector> logicals;
    for (const auto& v : kernel_basis(check)) {
        if (span.insert(v)) {
            logicals.push_back(v);
        }
    }

    ExhaustiveResult result;
    result.kernel_dimension = kdim;
    result.witness = BitVector(length());
    if (logicals.empty()) {
        return result;
    }

    const PackedBasis stab_packed = pack(stabilizers, length());
    const PackedBasis log_packed = pack(logicals, length());
    const std::size_t words = stab_packed.words;

    // Jobs: every nonzero logical combination times a prefix over the top
    // stabilizer generators; inside a job the remaining generators are swept.
    const std::size_t r = stabilizers.size();
    const std::size_t prefix_bits = std::min<std::size_t>(r, r > 16 ? 6 : 0);
    const std::size_t free_bits = r - prefix_bits;
    const std::uint64_t logical_combos = (std::uint64_t{1} << logicals.size()) - 1;
    const std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;
    const std::uint64_t jobs = logical_combos * prefixes;

    std::atomic<std::uint64_t> next{0};
    std::mutex mu;
    Best global;

    auto worker = [&] {
        Best local;
        for (std::uint64_t job = next++; job < jobs; job = next++) {
            const std::uint64_t lmask = job / prefixes + 1;
            const std::uint64_t pmask = job % prefixes;
            std::vector<std::uint64_t> start(words, 0);
            for (std::size_t i = 0; i < logicals.size(); ++i) {
                if ((lmask >> i) & 1U) {
                    for (std::size_t k = 0; k < words; ++k) start[k] ^= log_packed.at(i)[k];
                }
            }
            for (std::size_t i = 0; i < prefix_bits; ++i) {
                if ((pmask >> i) & 1U) {
                    const auto* g = stab_packed.at(free_bits + i);
                    for (std::size_t k = 0; k < words; ++k) start[k] ^= g[k];
                }
            }
            Best b = sweep(stab_packed, free_bits, std::move(start));
            b.job = job;
            if (b.beats(local)) {
                local = std::move(b);
            }
        }
        std::lock_guard lock(mu);
        if (local.beats(global)) {
            global = std::move(local);
        }
    };

    unsigned threads = options.threads != 0 ? options.threads : default_thread_count();
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, jobs));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }

    result.distance = global.weight;
    auto out_words = result.witness.words();
    std::copy(global.vector.begin(), global.vector.end(), out_words.begin());
    return result;
}

}  // namespace gbcodex
