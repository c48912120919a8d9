#include "gbcodex/torus_graph.hpp"

#include <cstdlib>
#include <string>

#include "gbcodex/gf2poly.hpp"

namespace gbcodex {

TorusGraph::TorusGraph(std::int64_t n, std::int64_t alpha) : n_(n), alpha_(alpha) {
    if (n < 2 || alpha < 1 || alpha > n - 1) {
        throw std::invalid_argument("torus graph needs n >= 2 and 1 <= alpha <= n-1");
    }
}

void TorusGraph::require_nondegenerate() const {
    if (degenerate()) {
        throw DegenerateGraph("degenerate graph: alpha = " + std::to_string(alpha_) + " with n = " +
                              std::to_string(n_) + " (need 1 < alpha < n-1)");
    }
}

std::int64_t TorusGraph::vertex(std::int64_t v) const {
    const std::int64_t r = v % n_;
    return r < 0 ? r + n_ : r;
}

BitMatrix TorusGraph::incidence_matrix() const {
    require_nondegenerate();
    std::vector<BitVector> rows;
    for (std::int64_t p = 0; p < n_; ++p) {
        rows.push_back(cocycle(p));
    }
    return BitMatrix::from_rows(static_cast<std::size_t>(2 * n_), rows);
}

BitMatrix TorusGraph::face_matrix() const {
    require_nondegenerate();
    std::vector<BitVector> rows;
    for (std::int64_t p = 0; p < n_; ++p) {
        rows.push_back(face(p));
    }
    return BitMatrix::from_rows(static_cast<std::size_t>(2 * n_), rows);
}

EdgeVector TorusGraph::face(std::int64_t p) const {
    require_nondegenerate();
    EdgeVector v(static_cast<std::size_t>(2 * n_));
    v.flip(unit_edge(p));              // p -- p+1
    v.flip(alpha_edge(p + 1));         // p+1 -- p+1+alpha
    v.flip(unit_edge(p + alpha_));     // p+alpha -- p+alpha+1
    v.flip(alpha_edge(p));             // p -- p+alpha
    return v;
}

EdgeVector TorusGraph::cocycle(std::int64_t p) const {
    require_nondegenerate();
    EdgeVector v(static_cast<std::size_t>(2 * n_));
    v.flip(unit_edge(p));
    v.flip(unit_edge(p - 1));
    v.flip(alpha_edge(p));
    v.flip(alpha_edge(p - alpha_));
    return v;
}

std::int64_t TorusGraph::end_vertex(const Walk& walk) const {
    std::int64_t v = vertex(walk.start);
    for (Step s : walk.steps) {
        switch (s) {
            case Step::Plus1: v += 1; break;
            case Step::Minus1: v -= 1; break;
            case Step::PlusAlpha: v += alpha_; break;
            case Step::MinusAlpha: v -= alpha_; break;
        }
        v = vertex(v);
    }
    return v;
}

EdgeVector TorusGraph::edges(const Walk& walk) const {
    EdgeVector out(static_cast<std::size_t>(2 * n_));
    std::int64_t v = vertex(walk.start);
    for (Step s : walk.steps) {
        switch (s) {
            case Step::Plus1:
                out.flip(unit_edge(v));
                v += 1;
                break;
            case Step::Minus1:
                out.flip(unit_edge(v - 1));
                v -= 1;
                break;
            case Step::PlusAlpha:
                out.flip(alpha_edge(v));
                v += alpha_;
                break;
            case Step::MinusAlpha:
                out.flip(alpha_edge(v - alpha_));
                v -= alpha_;
                break;
        }
        v = vertex(v);
    }
    return out;
}

Walk TorusGraph::staircase_walk(Vec2 t, std::int64_t start) const {
    if (t == Vec2{}) {
        throw std::invalid_argument("staircase needs a nonzero displacement");
    }
    if (!gb_contains(alpha_, n_, t)) {
        throw std::invalid_argument("walk does not close");
    }
    Walk w{start, {}};
    w.steps.insert(w.steps.end(), static_cast<std::size_t>(std::llabs(t.x)), t.x > 0 ? Step::Plus1 : Step::Minus1);
    w.steps.insert(w.steps.end(), static_cast<std::size_t>(std::llabs(t.y)),
                   t.y > 0 ? Step::PlusAlpha : Step::MinusAlpha);
    return w;
}

EdgeVector TorusGraph::staircase(Vec2 t, std::int64_t start) const { return edges(staircase_walk(t, start)); }

bool TorusGraph::is_sum_of_faces(const EdgeVector& v) const { return row_space_contains(face_matrix(), v); }

Vec2 lift(const Walk& walk) {
    Vec2 p;
    for (Step s : walk.steps) {
        switch (s) {
            case Step::Plus1: ++p.x; break;
            case Step::Minus1: --p.x; break;
            case Step::PlusAlpha: ++p.y; break;
            case Step::MinusAlpha: --p.y; break;
        }
    }
    return p;
}

}  // namespace gbcodex
