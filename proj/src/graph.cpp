#include "antiramsey/graph.hpp"

#include "antiramsey/errors.hpp"

#include <string>

namespace antiramsey {

std::vector<Edge> lexicographicPairs(int n)
{
    std::vector<Edge> out;
    out.reserve(pairCount(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            out.emplace_back(u, v);
    return out;
}

VertexSet::VertexSet(int universe)
    : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0)
{
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v)
        s.insert(v);
    return s;
}

VertexSet VertexSet::of(int universe, std::span<const int> members)
{
    VertexSet s(universe);
    for (int v : members) {
        if (v < 0 || v >= universe)
            throw InvalidArgument("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe - 1));
        s.insert(v);
    }
    return s;
}

int VertexSet::count() const noexcept
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const noexcept
{
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::isSubsetOf(const VertexSet& other) const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0)
            return false;
    return true;
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    forEach([&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int n) : n_(n)
{
    if (n < 0)
        throw InvalidArgument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const auto& e : edges)
        addEdge(e.u, e.v);
}

void Graph::checkVertex(int v) const
{
    if (v < 0 || v >= n_)
        throw InvalidArgument("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

void Graph::addEdge(int u, int v)
{
    checkVertex(u);
    checkVertex(v);
    if (u == v)
        throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (hasEdge(u, v))
        return;
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
    ++edges_;
}

void Graph::removeEdge(int u, int v)
{
    checkVertex(u);
    checkVertex(v);
    if (!hasEdge(u, v))
        return;
    adj_[static_cast<std::size_t>(u)].erase(v);
    adj_[static_cast<std::size_t>(v)].erase(u);
    --edges_;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<std::size_t>(u)].forEach([&](int v) {
            if (v > u)
                out.emplace_back(u, v);
        });
    return out;
}

Graph completeGraph(int n)
{
    if (n < 1)
        throw InvalidArgument("complete graph needs at least one vertex");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.addEdge(u, v);
    return g;
}

VertexSet commonNeighborhood(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw InvalidArgument("vertex set universe does not match graph order");
    VertexSet out = VertexSet::full(g.order());
    s.forEach([&](int u) { out &= g.neighbors(u); });
    out -= s;
    return out;
}

VertexSet commonNeighborhood(const Graph& g, std::span<const int> s)
{
    return commonNeighborhood(g, VertexSet::of(g.order(), s));
}

}  // namespace antiramsey
