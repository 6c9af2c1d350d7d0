#include "antiramsey/errors.hpp"
#include "antiramsey/rainbow.hpp"

#include <random>
#include <string>

namespace antiramsey {

Graph RepresentingGraph::graph() const
{
    return Graph(n, chosen);
}

bool RepresentingGraph::representsColoring(const EdgeColoring& c) const
{
    if (n != c.order() || static_cast<int>(chosen.size()) != c.colorCount())
        return false;
    for (std::size_t color = 0; color < chosen.size(); ++color) {
        const auto& e = chosen[color];
        if (e.u < 0 || e.v >= n || e.u == e.v || c.colorOf(e) != static_cast<int>(color))
            return false;
    }
    return true;
}

RepresentingEnumerator::RepresentingEnumerator(const EdgeColoring& c, std::uint64_t cap)
    : n_(c.order()), cap_(cap), classes_(c.classes()), choice_(classes_.size(), 0), total_(1)
{
    if (cap == 0)
        throw InvalidArgument("representing-graph cap must be at least 1");
    for (const auto& cls : classes_)
        total_ *= cls.size();
}

std::optional<RepresentingGraph> RepresentingEnumerator::next()
{
    if (done_ || yielded_ >= cap_)
        return std::nullopt;
    RepresentingGraph out{n_, {}};
    out.chosen.reserve(classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i)
        out.chosen.push_back(classes_[i][choice_[i]]);
    ++yielded_;

    std::size_t i = classes_.size();
    while (i > 0) {
        --i;
        if (++choice_[i] < classes_[i].size())
            break;
        choice_[i] = 0;
        if (i == 0)
            done_ = true;
    }
    if (classes_.empty())
        done_ = true;
    return out;
}

bool RepresentingEnumerator::capReached() const noexcept
{
    return !done_ && yielded_ >= cap_;
}

RepresentingGraph sampleRepresenting(const EdgeColoring& c, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    RepresentingGraph out{c.order(), {}};
    for (const auto& cls : c.classes()) {
        std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 1);
        out.chosen.push_back(cls[pick(rng)]);
    }
    return out;
}

RepresentingGraph representingFromEmbedding(const EdgeColoring& c, const Embedding& e)
{
    RepresentingGraph out{c.order(), {}};
    for (const auto& cls : c.classes())
        out.chosen.push_back(cls.front());
    for (const auto& edge : e.usedEdges)
        out.chosen[static_cast<std::size_t>(c.colorOf(edge))] = edge;
    return out;
}

RepresentingGraph recombineRepresenting(const EdgeColoring& c, std::span<const int> u, std::span<const int> w, int s,
                                        const RepresentingGraph& l1, const RepresentingGraph& l2)
{
    if (!l1.representsColoring(c) || !l2.representsColoring(c))
        throw InvalidArgument("inputs are not representing graphs of the coloring");
    if (w.empty())
        return l1;
    if (u.empty())
        throw InvalidArgument("U must be nonempty");
    if (s < 1)
        throw InvalidArgument("s must be positive");

    const int n = c.order();
    const VertexSet uSet = VertexSet::of(n, u);
    const VertexSet wSet = VertexSet::of(n, w);
    VertexSet overlap = uSet;
    overlap &= wSet;
    if (!overlap.empty())
        throw InvalidArgument("U and W must be disjoint");

    const Graph g1 = l1.graph();
    const Graph g2 = l2.graph();
    const auto x = commonNeighborhood(g1, uSet).members();
    const auto y = commonNeighborhood(g2, wSet).members();
    const auto uSize = static_cast<std::size_t>(uSet.count());
    const auto need = static_cast<std::size_t>(s);
    if (x.size() < need)
        throw PreconditionError("|N_L1(U)| = " + std::to_string(x.size()) + " < s = " + std::to_string(s));
    if (y.size() < need + need * uSize)
        throw PreconditionError("|N_L2(W)| = " + std::to_string(y.size()) + " < s + s|U| = "
                                + std::to_string(need + need * uSize));

    // Colors between the witness set X (first s common neighbours) and U.
    std::vector<char> blocked(static_cast<std::size_t>(c.colorCount()), 0);
    for (std::size_t i = 0; i < need; ++i)
        uSet.forEach([&](int uv) { blocked[static_cast<std::size_t>(c.colorOf(x[i], uv))] = 1; });

    RepresentingGraph out = l1;
    std::size_t kept = 0;
    for (int yv : y) {
        bool clean = true;
        wSet.forEach([&](int wv) { clean = clean && !blocked[static_cast<std::size_t>(c.colorOf(yv, wv))]; });
        if (!clean)
            continue;
        wSet.forEach([&](int wv) { out.chosen[static_cast<std::size_t>(c.colorOf(yv, wv))] = Edge(yv, wv); });
        ++kept;
    }
    if (kept < need)
        throw PreconditionError("only " + std::to_string(kept) + " common neighbours of W avoid the X-U colors");
    return out;
}

}  // namespace antiramsey
