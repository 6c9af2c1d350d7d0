#pragma once

// Slow reference implementations used only by the tests. They share no code
// with the library's search paths: rainbow and subgraph checks enumerate every
// injective vertex sequence, and the AR / ex values enumerate every coloring
// or every graph.

#include "antiramsey/coloring.hpp"
#include "antiramsey/forest.hpp"
#include "antiramsey/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace reference {

using antiramsey::EdgeColoring;
using antiramsey::Graph;
using antiramsey::LinearForest;

// edge(u, v) returns a color id >= 0, or -1 for a non-edge. Looks for an
// injective sequence of |V(F)| vertices whose consecutive in-part pairs are
// edges, optionally with pairwise distinct colors. `mustUse` restricts to
// copies containing that pair.
inline bool hasCopy(int n, const LinearForest& f, const std::function<int(int, int)>& edge, bool rainbow,
                    std::pair<int, int> mustUse = {-1, -1})
{
    std::vector<bool> partStart;
    for (int t : f.parts())
        for (int i = 0; i < t; ++i)
            partStart.push_back(i == 0);
    const int total = static_cast<int>(partStart.size());
    if (total > n)
        return false;
    std::vector<int> seq;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool()> rec = [&]() -> bool {
        if (static_cast<int>(seq.size()) == total) {
            std::multiset<int> colors;
            bool touches = mustUse.first < 0;
            for (int i = 1; i < total; ++i) {
                if (partStart[static_cast<std::size_t>(i)])
                    continue;
                const int a = seq[static_cast<std::size_t>(i - 1)];
                const int b = seq[static_cast<std::size_t>(i)];
                colors.insert(edge(a, b));
                if ((a == mustUse.first && b == mustUse.second) || (a == mustUse.second && b == mustUse.first))
                    touches = true;
            }
            if (!touches)
                return false;
            if (rainbow)
                for (int c : colors)
                    if (colors.count(c) > 1)
                        return false;
            return true;
        }
        const auto pos = seq.size();
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            if (!partStart[pos] && edge(seq.back(), v) < 0)
                continue;
            used[static_cast<std::size_t>(v)] = true;
            seq.push_back(v);
            const bool found = rec();
            seq.pop_back();
            used[static_cast<std::size_t>(v)] = false;
            if (found)
                return true;
        }
        return false;
    };
    return rec();
}

inline bool hasRainbow(const EdgeColoring& c, const LinearForest& f)
{
    return hasCopy(c.order(), f, [&](int u, int v) { return c.colorOf(u, v); }, true);
}

inline bool hasSubgraph(const Graph& g, const LinearForest& f)
{
    return hasCopy(g.order(), f, [&](int u, int v) { return g.hasEdge(u, v) ? 0 : -1; }, false);
}

// Calls fn(labels) for every restricted-growth string of the given length.
inline void forEachGrowthString(int length, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> s;
    std::function<void(int)> rec = [&](int blocks) {
        if (static_cast<int>(s.size()) == length) {
            fn(s);
            return;
        }
        for (int c = 0; c <= blocks; ++c) {
            s.push_back(c);
            rec(c == blocks ? blocks + 1 : blocks);
            s.pop_back();
        }
    };
    rec(0);
}

// AR(n, F) over all colorings, no pruning at all. -1 if every coloring has a rainbow F.
inline int naiveAR(int n, const LinearForest& f)
{
    int best = -1;
    forEachGrowthString(static_cast<int>(antiramsey::pairCount(n)), [&](const std::vector<int>& labels) {
        EdgeColoring c(n, labels);
        if (c.colorCount() > best && !hasRainbow(c, f))
            best = c.colorCount();
    });
    return best;
}

// ex(n, F) over all 2^(n choose 2) labeled graphs.
inline int naiveEx(int n, const LinearForest& f)
{
    const auto pairs = antiramsey::lexicographicPairs(n);
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U)
                g.addEdge(pairs[i].u, pairs[i].v);
        if (static_cast<int>(g.edgeCount()) > best && !hasSubgraph(g, f))
            best = static_cast<int>(g.edgeCount());
    }
    return best;
}

inline EdgeColoring randomColoring(int n, int maxColors, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, maxColors - 1);
    std::vector<int> raw(antiramsey::pairCount(n));
    for (auto& c : raw)
        c = pick(rng);
    return EdgeColoring(n, antiramsey::firstOccurrenceLabels(raw));
}

inline Graph randomGraph(int n, double density, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(density);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.addEdge(u, v);
    return g;
}

inline std::vector<int> randomPermutation(int n, std::mt19937_64& rng)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace reference
