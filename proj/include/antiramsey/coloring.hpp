#pragma once

#include "antiramsey/graph.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace antiramsey {

/// Surjective edge-coloring of K_n onto the dense id range {0..m-1}.
///
/// Ids are kept as supplied; `normalized()` relabels them in order of first
/// occurrence along the lexicographic edge order, so two colorings that differ
/// only by a permutation of ids compare equal after normalization.
class EdgeColoring {
public:
    EdgeColoring() = default;

    /// `colors[i]` is the color of the i-th pair of K_n in lexicographic order.
    /// Throws InvalidArgument on a size mismatch, a negative id, or a gap in
    /// the id range.
    EdgeColoring(int n, std::vector<int> colors);

    static EdgeColoring monochromatic(int n);
    /// Every edge its own color, numbered lexicographically.
    static EdgeColoring rainbow(int n);

    int order() const noexcept { return n_; }
    int colorCount() const noexcept { return m_; }
    int colorOf(int u, int v) const noexcept
    {
        return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    int colorOf(const Edge& e) const noexcept { return colorOf(e.u, e.v); }

    /// Colors in lexicographic edge order.
    const std::vector<int>& byEdge() const noexcept { return byEdge_; }
    /// Row-major n x n matrix with -1 on the diagonal.
    std::span<const int> matrix() const noexcept { return matrix_; }

    /// Edges of each color class, each list in lexicographic order.
    std::vector<std::vector<Edge>> classes() const;

    EdgeColoring normalized() const;

    friend bool operator==(const EdgeColoring& a, const EdgeColoring& b)
    {
        return a.n_ == b.n_ && a.byEdge_ == b.byEdge_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<int> byEdge_;
    std::vector<int> matrix_;
};

/// Relabels a color sequence in first-occurrence order (a restricted-growth string).
std::vector<int> firstOccurrenceLabels(std::span<const int> colors);

/// Coloring file: header `n m`, then `u v c` for each pair u < v exactly once.
/// Errors are ParseError with the 1-based line number as offset.
EdgeColoring readColoring(std::istream& in);
void writeColoring(std::ostream& out, const EdgeColoring& c);

}  // namespace antiramsey
