#pragma once

#include "antiramsey/coloring.hpp"
#include "antiramsey/forest.hpp"
#include "antiramsey/graph.hpp"

#include <chrono>
#include <cstdint>
#include <variant>

namespace antiramsey::oracles {

struct SearchBudget {
    std::uint64_t maxNodes = std::uint64_t{1} << 62;
    std::chrono::milliseconds maxMillis{std::chrono::hours(24)};
    int parallelism = 1;
    /// Number of leading edges whose assignments are expanded into independent tasks.
    int splitDepth = 4;

    /// Throws InvalidArgument unless every field is positive.
    void validate() const;
};

enum class Problem { AntiRamsey, Turan };

struct SearchStats {
    std::uint64_t nodesVisited = 0;
    /// Branches cut because the partial object already contained the pattern
    /// (a rainbow copy for AR, any copy for ex).
    std::uint64_t prunedByRainbow = 0;
    std::uint64_t prunedByBound = 0;
    std::chrono::milliseconds elapsed{0};
};

using Witness = std::variant<std::monostate, EdgeColoring, Graph>;

struct SearchReport {
    Problem problem = Problem::AntiRamsey;
    int n = 0;
    std::int64_t value = 0;
    /// Empty only when no object avoids the pattern (value 0, e.g. AR for a single edge).
    Witness witness;
    /// True iff the whole search tree was explored or pruned within budget,
    /// which certifies `value` as the optimum.
    bool exhausted = false;
    SearchStats stats;
};

/// Maximum number of colors in an edge-coloring of K_n with no rainbow F.
///
/// Colorings are enumerated as set partitions of the lexicographic edge list in
/// restricted-growth form, so each coloring is visited once up to relabeling.
/// After each edge is colored, only rainbow copies through that edge are
/// searched; a branch is also cut when its color count plus the remaining
/// edges cannot beat the incumbent. On budget exhaustion the report holds the
/// best value found with exhausted = false.
SearchReport bruteForceAR(int n, const LinearForest& f, const SearchBudget& budget = {});

/// Maximum number of edges of an F-free graph on n vertices, by include/exclude
/// branch-and-bound over the lexicographic edge list. For a single path P_k the
/// bound (k-2)n/2 also caps the search.
SearchReport bruteForceEx(int n, const LinearForest& f, const SearchBudget& budget = {});

/// Re-checks a report: the witness avoids F (rainbow or plain, by problem) and
/// its color or edge count equals the reported value.
bool verifyWitness(const SearchReport& report, const LinearForest& f);

}  // namespace antiramsey::oracles
