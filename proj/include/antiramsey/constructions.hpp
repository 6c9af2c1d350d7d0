#pragma once

#include "antiramsey/coloring.hpp"
#include "antiramsey/embedding.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/forest.hpp"
#include "antiramsey/graph.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antiramsey {

/// Where the second interior color goes when the interior gets two colors.
enum class Arrangement {
    /// Exactly one interior edge (the first in lexicographic order) carries it.
    SingleEdgeSecondColor,
    /// The star of the last vertex inside the interior carries it.
    MonochromaticInterior,
};

std::string_view toString(Arrangement a);
/// Accepts "single-edge" and "monochromatic". Throws InvalidArgument otherwise.
Arrangement parseArrangement(std::string_view text);

/// Shape of a hub construction: `hubSize` vertices 0..hubSize-1 whose incident
/// edges are all distinct colors (or universal, for graphs), and an interior on
/// the remaining vertices.
struct HubSpec {
    int n = 0;
    int hubSize = 0;
    int interiorColors = 1;
    Arrangement arrangement = Arrangement::SingleEdgeSecondColor;
};

/// Thrown when a freshly built coloring contains a rainbow copy of its forest.
class ConstructionRejected : public Error {
public:
    ConstructionRejected(const std::string& what, Embedding witness)
        : Error(what), witness_(std::move(witness))
    {
    }
    const Embedding& witness() const noexcept { return witness_; }

private:
    Embedding witness_;
};

enum class Verification { Run, Skip };

/// Hub coloring of K_n: hub-internal edges first, then hub-to-interior edges,
/// each a fresh color in lexicographic order; the interior gets the last
/// `interiorColors` ids.
EdgeColoring buildHubColoring(const HubSpec& spec);

/// G_F(n): s-1 universal vertices; outside them one edge if every part is odd,
/// otherwise an independent set.
Graph buildTuranExtremal(int n, const LinearForest& f);

/// Extremal coloring for P_k: hub of floor((k-1)/2)-1 rainbow-incident vertices
/// and an interior with 1 color (k odd) or 2 colors (k even).
EdgeColoring buildPathColoring(int n, int k, Arrangement arrangement = Arrangement::SingleEdgeSecondColor);

HubSpec forestHubSpec(int n, const LinearForest& f, Arrangement arrangement);

/// Extremal coloring for a linear forest with at least one even part: hub of
/// s-2 vertices, interior with 1+ε colors. With Verification::Run the result
/// is checked with findRainbow and ConstructionRejected carries any witness.
EdgeColoring buildForestColoring(int n, const LinearForest& f,
                                 Arrangement arrangement = Arrangement::SingleEdgeSecondColor,
                                 Verification verification = Verification::Run);

struct HubChoice {
    std::vector<int> hub;
    int commonOutside = 0;
};

/// Among the hubSize-subsets of `p`, the one whose common neighbourhood has
/// the most vertices outside `p`; ties go to the lexicographically smallest
/// sorted subset.
HubChoice hubSearch(const Graph& g, std::span<const int> p, int hubSize);

}  // namespace antiramsey
