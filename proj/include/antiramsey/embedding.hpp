#pragma once

#include "antiramsey/coloring.hpp"
#include "antiramsey/forest.hpp"
#include "antiramsey/graph.hpp"

#include <optional>
#include <vector>

namespace antiramsey {

/// A placement of a linear forest in a host graph. `paths[i]` holds the host
/// vertices of the i-th part of `forest`, in path order.
struct Embedding {
    LinearForest forest;
    std::vector<std::vector<int>> paths;
    std::vector<Edge> usedEdges;
    /// Present when the embedding was found in an edge-colored host.
    std::optional<std::vector<int>> usedColors;
};

/// Builds an embedding from per-part vertex sequences, deriving the edge list
/// (and the color list when `coloring` is given).
Embedding makeEmbedding(const LinearForest& forest, std::vector<std::vector<int>> paths,
                        const EdgeColoring* coloring = nullptr);

/// Vertices distinct, part sizes match the forest, consecutive vertices adjacent in `host`.
bool isValidEmbedding(const Embedding& e, const Graph& host);

/// Valid in K_n and all used edges carry pairwise distinct colors under `c`.
bool isRainbowEmbedding(const Embedding& e, const EdgeColoring& c);

}  // namespace antiramsey
