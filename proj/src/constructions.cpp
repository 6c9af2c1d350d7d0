#include "antiramsey/constructions.hpp"

#include "antiramsey/errors.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/rainbow.hpp"

#include <algorithm>

namespace antiramsey {

std::string_view toString(Arrangement a)
{
    switch (a) {
    case Arrangement::SingleEdgeSecondColor:
        return "single-edge";
    case Arrangement::MonochromaticInterior:
        return "monochromatic";
    }
    return "?";
}

Arrangement parseArrangement(std::string_view text)
{
    if (text == "single-edge")
        return Arrangement::SingleEdgeSecondColor;
    if (text == "monochromatic")
        return Arrangement::MonochromaticInterior;
    throw InvalidArgument("unknown arrangement '" + std::string(text) + "' (expected single-edge or monochromatic)");
}

EdgeColoring buildHubColoring(const HubSpec& spec)
{
    const int n = spec.n;
    const int h = spec.hubSize;
    const int interior = n - h;
    if (h < 0 || interior < 1)
        throw InvalidArgument("hub of size " + std::to_string(h) + " does not fit in K_" + std::to_string(n));
    if (spec.interiorColors < 1 || spec.interiorColors > 2)
        throw InvalidArgument("interior uses one or two colors");
    if (spec.interiorColors == 2) {
        const int minInterior = spec.arrangement == Arrangement::SingleEdgeSecondColor ? 2 : 3;
        if (interior < minInterior)
            throw InvalidArgument("interior of " + std::to_string(interior) + " vertices cannot carry two colors");
    }

    std::vector<int> colors(pairCount(n), -1);
    int next = 0;
    auto paint = [&](int u, int v, int c) { colors[edgeIndex(n, u, v)] = c; };
    for (int u = 0; u < h; ++u)
        for (int v = u + 1; v < h; ++v)
            paint(u, v, next++);
    for (int u = 0; u < h; ++u)
        for (int v = h; v < n; ++v)
            paint(u, v, next++);

    const int base = next;
    for (int u = h; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            paint(u, v, base);
    if (spec.interiorColors == 2) {
        if (spec.arrangement == Arrangement::SingleEdgeSecondColor) {
            paint(h, h + 1, base + 1);
        } else {
            for (int u = h; u < n - 1; ++u)
                paint(u, n - 1, base + 1);
        }
    }
    return EdgeColoring(n, std::move(colors));
}

Graph buildTuranExtremal(int n, const LinearForest& f)
{
    if (f.componentCount() < 2)
        throw InvalidArgument("the Turán construction needs at least two paths");
    if (f.allEqualTo(3))
        throw UnsupportedCase("every path is P3; the k·P3 extremal graph differs");
    if (n < f.order())
        throw InvalidArgument("n = " + std::to_string(n) + " is smaller than |V(F)| = " + std::to_string(f.order()));
    const int h = f.halfSum() - 1;
    Graph g(n);
    for (int u = 0; u < h; ++u)
        for (int v = u + 1; v < n; ++v)
            g.addEdge(u, v);
    if (formulas::ParityCensus(f).turanConstant() == 1)
        g.addEdge(h, h + 1);
    return g;
}

EdgeColoring buildPathColoring(int n, int k, Arrangement arrangement)
{
    if (k < 3)
        throw InvalidArgument("path colorings need k >= 3; every edge is a rainbow P2");
    if (n < k)
        throw InvalidArgument("n = " + std::to_string(n) + " cannot host P" + std::to_string(k));
    const int h = std::max(0, (k - 1) / 2 - 1);
    return buildHubColoring({n, h, k % 2 == 0 ? 2 : 1, arrangement});
}

HubSpec forestHubSpec(int n, const LinearForest& f, Arrangement arrangement)
{
    const formulas::ParityCensus census(f);
    return {n, f.halfSum() - 2, 1 + census.mainEpsilon(), arrangement};
}

EdgeColoring buildForestColoring(int n, const LinearForest& f, Arrangement arrangement, Verification verification)
{
    if (f.componentCount() < 2)
        throw InvalidArgument("forest colorings need at least two paths; use buildPathColoring");
    if (f.allOdd())
        throw UnsupportedCase("forest " + f.name() + " has no even path");
    if (n < f.order() + f.halfSum())
        throw InvalidArgument("n = " + std::to_string(n) + " is below f + s = "
                              + std::to_string(f.order() + f.halfSum()));

    EdgeColoring c = buildHubColoring(forestHubSpec(n, f, arrangement));
    if (verification == Verification::Run) {
        if (auto witness = findRainbow(c, f))
            throw ConstructionRejected("arrangement " + std::string(toString(arrangement)) + " admits a rainbow "
                                           + f.name() + " at n = " + std::to_string(n),
                                       std::move(*witness));
    }
    return c;
}

HubChoice hubSearch(const Graph& g, std::span<const int> p, int hubSize)
{
    std::vector<int> pool(p.begin(), p.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    const VertexSet pSet = VertexSet::of(g.order(), pool);
    if (hubSize < 0 || hubSize > static_cast<int>(pool.size()))
        throw InvalidArgument("hub size " + std::to_string(hubSize) + " exceeds |P| = " + std::to_string(pool.size()));

    HubChoice best{{}, -1};
    std::vector<int> idx(static_cast<std::size_t>(hubSize));
    for (int i = 0; i < hubSize; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    const int m = static_cast<int>(pool.size());
    std::vector<int> subset(static_cast<std::size_t>(hubSize));
    while (true) {
        for (int i = 0; i < hubSize; ++i)
            subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        VertexSet outside = commonNeighborhood(g, std::span<const int>(subset));
        outside -= pSet;
        const int value = outside.count();
        if (value > best.commonOutside)
            best = {subset, value};

        int i = hubSize - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - hubSize + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < hubSize; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return best;
}

}  // namespace antiramsey
