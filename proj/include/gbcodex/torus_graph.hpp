#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gbcodex/bitmatrix.hpp"
#include "gbcodex/lattice.hpp"

namespace gbcodex {

// Edge subset of the torus graph, length 2n. Index k < n is the unit edge
// {k, k+1}; index n+k is the alpha edge {k, k+alpha}.
using EdgeVector = BitVector;

enum class Step { Plus1, Minus1, PlusAlpha, MinusAlpha };

struct Walk {
    std::int64_t start = 0;
    std::vector<Step> steps;
};

class DegenerateGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Graph on Z/nZ with edges v -- v+1 and v -- v+alpha.
class TorusGraph {
public:
    /// Accepts 1 <= alpha <= n-1. Faces, cocycles and the incidence matrix
    /// additionally require 1 < alpha < n-1 and throw DegenerateGraph otherwise.
    TorusGraph(std::int64_t n, std::int64_t alpha);

    std::int64_t n() const { return n_; }
    std::int64_t alpha() const { return alpha_; }
    bool degenerate() const { return alpha_ <= 1 || alpha_ >= n_ - 1; }

    /// n x 2n vertex-edge incidence matrix, equal to [Circ(1+x) | Circ(1+x^alpha)].
    BitMatrix incidence_matrix() const;
    /// n x 2n matrix whose rows are the faces, equal to [Circ(1+x^alpha)^T | Circ(1+x)^T].
    BitMatrix face_matrix() const;

    /// Square p -> p+1 -> p+1+alpha -> p+alpha -> p.
    EdgeVector face(std::int64_t p) const;
    /// The four edges at vertex p.
    EdgeVector cocycle(std::int64_t p) const;

    std::int64_t vertex(std::int64_t v) const;
    std::int64_t end_vertex(const Walk& walk) const;
    bool is_closed(const Walk& walk) const { return end_vertex(walk) == vertex(walk.start); }
    /// Toggles every traversed edge; edges used twice cancel.
    EdgeVector edges(const Walk& walk) const;

    /// Walk realizing displacement t: |t.x| unit steps then |t.y| alpha steps.
    /// Throws std::invalid_argument("walk does not close") when t is not in the lattice.
    Walk staircase_walk(Vec2 t, std::int64_t start = 0) const;
    EdgeVector staircase(Vec2 t, std::int64_t start = 0) const;

    /// Decided by a rank test against the face matrix.
    bool is_sum_of_faces(const EdgeVector& v) const;

private:
    void require_nondegenerate() const;
    std::size_t unit_edge(std::int64_t from) const { return static_cast<std::size_t>(vertex(from)); }
    std::size_t alpha_edge(std::int64_t from) const { return static_cast<std::size_t>(n_ + vertex(from)); }

    std::int64_t n_;
    std::int64_t alpha_;
};

/// (#(+1) - #(-1), #(+alpha) - #(-alpha)).
Vec2 lift(const Walk& walk);

}  // namespace gbcodex
