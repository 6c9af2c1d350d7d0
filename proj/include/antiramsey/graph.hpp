#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace antiramsey {

/// Undirected edge, always stored normalized as (u, v) with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Position of edge {u,v} in the lexicographic order of all pairs of K_n.
constexpr std::size_t edgeIndex(int n, int u, int v)
{
    if (u > v) {
        const int t = u;
        u = v;
        v = t;
    }
    const auto su = static_cast<std::size_t>(u);
    return su * static_cast<std::size_t>(n) - su * (su + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

constexpr std::size_t pairCount(int n)
{
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// All pairs of K_n in lexicographic order; entry i has edgeIndex(n, ...) == i.
std::vector<Edge> lexicographicPairs(int n);

/// Fixed-universe set of vertices {0..n-1}, packed 64 per word.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    static VertexSet full(int universe);
    static VertexSet of(int universe, std::span<const int> members);

    int universe() const noexcept { return universe_; }
    bool contains(int v) const noexcept { return (words_[word(v)] >> bit(v)) & 1U; }
    void insert(int v) noexcept { words_[word(v)] |= mask(v); }
    void erase(int v) noexcept { words_[word(v)] &= ~mask(v); }
    int count() const noexcept;
    bool empty() const noexcept;

    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& operator|=(const VertexSet& other) noexcept;
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) noexcept;
    bool isSubsetOf(const VertexSet& other) const noexcept;

    std::vector<int> members() const;

    /// Calls fn(v) for each member in increasing order.
    template <typename Fn>
    void forEach(Fn&& fn) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                fn(static_cast<int>(w * 64) + b);
            }
        }
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    static std::size_t word(int v) noexcept { return static_cast<std::size_t>(v) >> 6; }
    static unsigned bit(int v) noexcept { return static_cast<unsigned>(v) & 63U; }
    static std::uint64_t mask(int v) noexcept { return std::uint64_t{1} << bit(v); }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on {0..n-1} with one packed adjacency row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t edgeCount() const noexcept { return edges_; }

    bool hasEdge(int u, int v) const noexcept { return u != v && adj_[static_cast<std::size_t>(u)].contains(v); }
    void addEdge(int u, int v);
    void removeEdge(int u, int v);

    const VertexSet& neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const noexcept { return adj_[static_cast<std::size_t>(v)].count(); }

    /// Edges in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void checkVertex(int v) const;

    int n_ = 0;
    std::size_t edges_ = 0;
    std::vector<VertexSet> adj_;
};

/// K_n. Throws InvalidArgument for n < 1.
Graph completeGraph(int n);

/// Vertices outside `s` adjacent to every member of `s`; all of V(G) when `s` is empty.
VertexSet commonNeighborhood(const Graph& g, std::span<const int> s);
VertexSet commonNeighborhood(const Graph& g, const VertexSet& s);

}  // namespace antiramsey
