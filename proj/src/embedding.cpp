#include "antiramsey/embedding.hpp"

#include <algorithm>

namespace antiramsey {

Embedding makeEmbedding(const LinearForest& forest, std::vector<std::vector<int>> paths,
                        const EdgeColoring* coloring)
{
    Embedding e{forest, std::move(paths), {}, std::nullopt};
    std::vector<int> colors;
    for (const auto& p : e.paths)
        for (std::size_t i = 1; i < p.size(); ++i) {
            e.usedEdges.emplace_back(p[i - 1], p[i]);
            if (coloring != nullptr)
                colors.push_back(coloring->colorOf(p[i - 1], p[i]));
        }
    if (coloring != nullptr)
        e.usedColors = std::move(colors);
    return e;
}

bool isValidEmbedding(const Embedding& e, const Graph& host)
{
    const auto& parts = e.forest.parts();
    if (e.paths.size() != parts.size())
        return false;
    std::vector<char> seen(static_cast<std::size_t>(host.order()), 0);
    std::size_t edgeTotal = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = e.paths[i];
        if (static_cast<int>(p.size()) != parts[i])
            return false;
        for (std::size_t j = 0; j < p.size(); ++j) {
            const int v = p[j];
            if (v < 0 || v >= host.order() || seen[static_cast<std::size_t>(v)])
                return false;
            seen[static_cast<std::size_t>(v)] = 1;
            if (j > 0 && !host.hasEdge(p[j - 1], v))
                return false;
        }
        edgeTotal += p.size() - 1;
    }
    return e.usedEdges.size() == edgeTotal;
}

bool isRainbowEmbedding(const Embedding& e, const EdgeColoring& c)
{
    if (!isValidEmbedding(e, completeGraph(c.order())))
        return false;
    std::vector<int> colors;
    for (const auto& edge : e.usedEdges)
        colors.push_back(c.colorOf(edge));
    if (e.usedColors && *e.usedColors != colors)
        return false;
    std::sort(colors.begin(), colors.end());
    return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

}  // namespace antiramsey
