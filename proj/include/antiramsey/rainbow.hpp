#pragma once

#include "antiramsey/coloring.hpp"
#include "antiramsey/embedding.hpp"
#include "antiramsey/forest.hpp"
#include "antiramsey/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace antiramsey {

/// Edge-coloring of a subset of the pairs of K_n, grown and shrunk one edge at
/// a time. Uncolored pairs are non-edges of `support()`. Color ids need not be
/// dense; `distinctColors()` counts the ids currently in use.
class PartialColoring {
public:
    static constexpr int kUncolored = -1;

    explicit PartialColoring(int n);

    int order() const noexcept { return n_; }
    int colorOf(int u, int v) const noexcept
    {
        return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    const Graph& support() const noexcept { return support_; }
    int distinctColors() const noexcept { return distinct_; }
    /// One past the largest id ever assigned.
    int colorIdBound() const noexcept { return static_cast<int>(classSize_.size()); }
    std::span<const int> matrix() const noexcept { return matrix_; }

    /// Colors pair {u,v}; it must currently be uncolored.
    void assign(int u, int v, int color);
    /// Uncolors pair {u,v}; no-op if already uncolored.
    void clear(int u, int v);

private:
    int n_;
    int distinct_ = 0;
    std::vector<int> matrix_;
    std::vector<int> classSize_;
    Graph support_;
};

/// A rainbow copy of F under `c`, or nullopt if none exists.
std::optional<Embedding> findRainbow(const EdgeColoring& c, const LinearForest& f);

/// A rainbow copy of F among the colored pairs of `c`. When `anchor` is set,
/// only copies that use that pair are searched.
std::optional<Embedding> findRainbow(const PartialColoring& c, const LinearForest& f,
                                     std::optional<Edge> anchor = std::nullopt);

/// A copy of F in `g`, or nullopt if `g` is F-free. When `anchor` is set, only
/// copies that use that edge are searched.
std::optional<Embedding> containsSubgraph(const Graph& g, const LinearForest& f,
                                          std::optional<Edge> anchor = std::nullopt);

/// One edge chosen from each color class; `chosen[c]` has color c.
struct RepresentingGraph {
    int n = 0;
    std::vector<Edge> chosen;

    Graph graph() const;
    /// Exactly one edge per color of `c`, each of the color it stands for.
    bool representsColoring(const EdgeColoring& c) const;

    friend bool operator==(const RepresentingGraph&, const RepresentingGraph&) = default;
};

/// Walks the representing graphs of a coloring in lexicographic order of the
/// per-color choice vector (last color varies fastest), stopping after `cap`.
class RepresentingEnumerator {
public:
    RepresentingEnumerator(const EdgeColoring& c, std::uint64_t cap);

    std::optional<RepresentingGraph> next();

    /// Product of the color class sizes.
    const boost::multiprecision::cpp_int& totalCount() const noexcept { return total_; }
    std::uint64_t yielded() const noexcept { return yielded_; }
    /// True once `cap` members have been produced while more remain.
    bool capReached() const noexcept;

private:
    int n_;
    std::uint64_t cap_;
    std::uint64_t yielded_ = 0;
    bool done_ = false;
    std::vector<std::vector<Edge>> classes_;
    std::vector<std::size_t> choice_;
    boost::multiprecision::cpp_int total_;
};

/// One uniformly random edge per color class; deterministic in (c, seed).
RepresentingGraph sampleRepresenting(const EdgeColoring& c, std::uint64_t seed);

/// Completes a rainbow embedding to a representing graph: the embedding's edges
/// stand for their colors and every other color takes its first edge.
RepresentingGraph representingFromEmbedding(const EdgeColoring& c, const Embedding& e);

/// Merges two representing graphs so that both `u` and `w` keep at least `s`
/// common neighbours.
///
/// `l1` must give `u` at least s common neighbours and `l2` must give `w` at
/// least s + s|u|. The result keeps `l1`'s edges from a witness set X of s
/// common neighbours to `u`, then swaps in `l2`'s edges from `w` to every
/// common neighbour y of `w` whose edges to `w` avoid the s|u| colors between
/// X and `u`. At most s|u| of the candidates y are blocked, so at least s remain.
///
/// Throws PreconditionError naming the failing cardinality, InvalidArgument on
/// overlapping or empty sets. An empty `w` returns `l1` unchanged.
RepresentingGraph recombineRepresenting(const EdgeColoring& c, std::span<const int> u, std::span<const int> w, int s,
                                        const RepresentingGraph& l1, const RepresentingGraph& l2);

}  // namespace antiramsey
