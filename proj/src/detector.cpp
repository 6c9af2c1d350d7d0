// Backtracking search for (rainbow) copies of a linear forest.
//
// Parts are placed longest first. A free part starts at an unused vertex and
// grows one endpoint at a time; it is accepted only with its first vertex
// smaller than its last, and among equal-length free parts the start vertices
// increase. Every copy has exactly one such orientation and ordering, so no
// witness is lost. Trailing P2 parts go through a matching phase: a greedy
// pass first, then backtracking over edges with increasing smaller endpoint.
//
// In colored mode each new edge must carry an unused color, and a branch is
// cut when the colors still unused are fewer than the edges still to place.

#include "antiramsey/rainbow.hpp"

#include "antiramsey/errors.hpp"

#include <algorithm>

namespace antiramsey {

namespace {

struct Host {
    int n = 0;
    const Graph* graph = nullptr;
    std::span<const int> matrix;  // empty in plain mode
    int colorIdBound = 0;
    int distinctColors = 0;

    bool colored() const noexcept { return !matrix.empty(); }
    int color(int u, int v) const noexcept
    {
        return matrix[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    }
};

class ForestSearch {
public:
    ForestSearch(const Host& host, const LinearForest& forest)
        : host_(host),
          forest_(forest),
          parts_(forest.parts()),
          used_(host.n),
          usedColor_(static_cast<std::size_t>(host.colorIdBound), 0),
          edgesRemaining_(forest.edgeCount()),
          paths_(parts_.size())
    {
    }

    std::optional<Embedding> run(std::optional<Edge> anchor)
    {
        if (forest_.order() > host_.n)
            return std::nullopt;
        if (host_.colored() && host_.distinctColors < forest_.edgeCount())
            return std::nullopt;
        if (!anchor) {
            order_.resize(parts_.size());
            for (std::size_t i = 0; i < parts_.size(); ++i)
                order_[i] = static_cast<int>(i);
            anchoredPart_ = -1;
            return finish(placeFrom(0));
        }

        const int a = anchor->u;
        const int b = anchor->v;
        if (a < 0 || b >= host_.n || a == b)
            throw InvalidArgument("anchor edge outside the host");
        if (!host_.graph->hasEdge(a, b))
            return std::nullopt;
        for (std::size_t p = 0; p < parts_.size(); ++p) {
            if (p > 0 && parts_[p] == parts_[p - 1])
                continue;
            anchoredPart_ = static_cast<int>(p);
            order_.clear();
            order_.push_back(static_cast<int>(p));
            for (std::size_t i = 0; i < parts_.size(); ++i)
                if (i != p)
                    order_.push_back(static_cast<int>(i));
            const int t = parts_[p];
            for (int j = 0; j + 1 < t; ++j) {
                if (placeAnchored(a, b, j))
                    return finish(true);
            }
        }
        return std::nullopt;
    }

private:
    std::optional<Embedding> finish(bool found)
    {
        if (!found)
            return std::nullopt;
        std::vector<std::vector<int>> paths(paths_.begin(), paths_.end());
        std::vector<int> colors;
        Embedding e{forest_, std::move(paths), {}, std::nullopt};
        for (const auto& p : e.paths)
            for (std::size_t i = 1; i < p.size(); ++i) {
                e.usedEdges.emplace_back(p[i - 1], p[i]);
                if (host_.colored())
                    colors.push_back(host_.color(p[i - 1], p[i]));
            }
        if (host_.colored())
            e.usedColors = std::move(colors);
        return e;
    }

    bool colorsSuffice() const noexcept
    {
        return !host_.colored() || host_.distinctColors - usedColorCount_ >= edgesRemaining_;
    }

    bool takeEdge(int u, int v) noexcept
    {
        if (host_.colored()) {
            const int c = host_.color(u, v);
            if (usedColor_[static_cast<std::size_t>(c)])
                return false;
            usedColor_[static_cast<std::size_t>(c)] = 1;
            ++usedColorCount_;
        }
        --edgesRemaining_;
        return true;
    }

    void dropEdge(int u, int v) noexcept
    {
        if (host_.colored()) {
            usedColor_[static_cast<std::size_t>(host_.color(u, v))] = 0;
            --usedColorCount_;
        }
        ++edgesRemaining_;
    }

    int verticesRemaining(std::size_t pos) const noexcept
    {
        int r = 0;
        for (std::size_t i = pos; i < order_.size(); ++i)
            r += parts_[static_cast<std::size_t>(order_[i])];
        return r;
    }

    // Calls fn(w) for unused neighbours w of v, stopping early when fn returns true.
    template <typename Fn>
    bool forEachFreeNeighbor(int v, Fn&& fn)
    {
        const auto adj = host_.graph->neighbors(v).words();
        const auto used = used_.words();
        for (std::size_t w = 0; w < adj.size(); ++w) {
            std::uint64_t bits = adj[w] & ~used[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                if (fn(static_cast<int>(w * 64) + b))
                    return true;
            }
        }
        return false;
    }

    bool placeFrom(std::size_t pos)
    {
        if (pos == order_.size())
            return true;
        const int part = order_[pos];
        const int t = parts_[static_cast<std::size_t>(part)];
        if (host_.n - usedVertices_ < verticesRemaining(pos))
            return false;
        if (!colorsSuffice())
            return false;
        if (t == 2)
            return matchingPhase(pos);

        int minStart = 0;
        if (pos > 0 && order_[pos - 1] != anchoredPart_ && parts_[static_cast<std::size_t>(order_[pos - 1])] == t)
            minStart = paths_[static_cast<std::size_t>(order_[pos - 1])].front() + 1;

        auto& path = paths_[static_cast<std::size_t>(part)];
        for (int v = minStart; v < host_.n; ++v) {
            if (used_.contains(v) || host_.graph->degree(v) == 0)
                continue;
            used_.insert(v);
            ++usedVertices_;
            path.push_back(v);
            if (growFree(pos, part, t))
                return true;
            path.pop_back();
            used_.erase(v);
            --usedVertices_;
        }
        return false;
    }

    bool growFree(std::size_t pos, int part, int t)
    {
        auto& path = paths_[static_cast<std::size_t>(part)];
        if (static_cast<int>(path.size()) == t)
            return placeFrom(pos + 1);
        if (!colorsSuffice())
            return false;
        const int last = path.back();
        const bool closing = static_cast<int>(path.size()) == t - 1;
        const int front = path.front();
        return forEachFreeNeighbor(last, [&](int w) {
            if (closing && w < front)
                return false;
            if (!takeEdge(last, w))
                return false;
            used_.insert(w);
            ++usedVertices_;
            path.push_back(w);
            if (growFree(pos, part, t))
                return true;
            path.pop_back();
            used_.erase(w);
            --usedVertices_;
            dropEdge(last, w);
            return false;
        });
    }

    // The anchored part holds the anchor at positions (j, j+1): grow the right
    // side to t-j vertices, then the left side by j vertices.
    bool placeAnchored(int a, int b, int j)
    {
        const int part = order_[0];
        const int t = parts_[static_cast<std::size_t>(part)];
        if (!takeEdge(a, b))
            return false;
        used_.insert(a);
        used_.insert(b);
        usedVertices_ += 2;
        right_ = {a, b};
        left_.clear();
        const bool found = growAnchoredRight(t - j, j);
        used_.erase(a);
        used_.erase(b);
        usedVertices_ -= 2;
        dropEdge(a, b);
        return found;
    }

    bool growAnchoredRight(int rightLen, int leftLen)
    {
        if (static_cast<int>(right_.size()) == rightLen)
            return growAnchoredLeft(leftLen);
        if (!colorsSuffice())
            return false;
        const int last = right_.back();
        return forEachFreeNeighbor(last, [&](int w) {
            if (!takeEdge(last, w))
                return false;
            used_.insert(w);
            ++usedVertices_;
            right_.push_back(w);
            const bool found = growAnchoredRight(rightLen, leftLen);
            right_.pop_back();
            used_.erase(w);
            --usedVertices_;
            dropEdge(last, w);
            return found;
        });
    }

    bool growAnchoredLeft(int leftLen)
    {
        if (static_cast<int>(left_.size()) == leftLen) {
            auto& path = paths_[static_cast<std::size_t>(order_[0])];
            path.assign(left_.rbegin(), left_.rend());
            path.insert(path.end(), right_.begin(), right_.end());
            if (placeFrom(1))
                return true;
            path.clear();
            return false;
        }
        if (!colorsSuffice())
            return false;
        const int last = left_.empty() ? right_.front() : left_.back();
        return forEachFreeNeighbor(last, [&](int w) {
            if (!takeEdge(last, w))
                return false;
            used_.insert(w);
            ++usedVertices_;
            left_.push_back(w);
            const bool found = growAnchoredLeft(leftLen);
            left_.pop_back();
            used_.erase(w);
            --usedVertices_;
            dropEdge(last, w);
            return found;
        });
    }

    bool matchingPhase(std::size_t pos)
    {
        if (greedyMatching(pos))
            return true;
        int minU = 0;
        if (pos > 0 && order_[pos - 1] != anchoredPart_ && parts_[static_cast<std::size_t>(order_[pos - 1])] == 2)
            minU = paths_[static_cast<std::size_t>(order_[pos - 1])].front() + 1;
        return backtrackMatching(pos, minU);
    }

    bool greedyMatching(std::size_t pos)
    {
        std::vector<std::pair<int, int>> taken;
        const std::size_t need = order_.size() - pos;
        for (int u = 0; u < host_.n && taken.size() < need; ++u) {
            if (used_.contains(u))
                continue;
            forEachFreeNeighbor(u, [&](int v) {
                if (v < u || !takeEdge(u, v))
                    return false;
                used_.insert(u);
                used_.insert(v);
                taken.emplace_back(u, v);
                return true;
            });
        }
        const bool ok = taken.size() == need;
        for (std::size_t i = 0; i < taken.size(); ++i) {
            const auto [u, v] = taken[i];
            if (ok) {
                paths_[static_cast<std::size_t>(order_[pos + i])] = {u, v};
            } else {
                used_.erase(u);
                used_.erase(v);
                dropEdge(u, v);
            }
        }
        if (ok) {
            // Leave state as the backtracking path would: the caller only
            // reads the paths after success.
            usedVertices_ += static_cast<int>(2 * need);
        }
        return ok;
    }

    bool backtrackMatching(std::size_t pos, int minU)
    {
        if (pos == order_.size())
            return true;
        if (host_.n - usedVertices_ < verticesRemaining(pos) || !colorsSuffice())
            return false;
        auto& path = paths_[static_cast<std::size_t>(order_[pos])];
        for (int u = minU; u < host_.n; ++u) {
            if (used_.contains(u))
                continue;
            used_.insert(u);
            const bool found = forEachFreeNeighbor(u, [&](int v) {
                if (v < u || !takeEdge(u, v))
                    return false;
                used_.insert(v);
                usedVertices_ += 2;
                path = {u, v};
                const bool ok = backtrackMatching(pos + 1, u + 1);
                if (!ok)
                    path.clear();
                used_.erase(v);
                usedVertices_ -= 2;
                dropEdge(u, v);
                return ok;
            });
            used_.erase(u);
            if (found)
                return true;
        }
        return false;
    }

    const Host& host_;
    const LinearForest& forest_;
    const std::vector<int>& parts_;
    VertexSet used_;
    int usedVertices_ = 0;
    std::vector<char> usedColor_;
    int usedColorCount_ = 0;
    int edgesRemaining_ = 0;
    std::vector<int> order_;
    int anchoredPart_ = -1;
    std::vector<std::vector<int>> paths_;
    std::vector<int> right_;
    std::vector<int> left_;
};

std::optional<Embedding> search(const Host& host, const LinearForest& f, std::optional<Edge> anchor)
{
    ForestSearch s(host, f);
    return s.run(anchor);
}

}  // namespace

PartialColoring::PartialColoring(int n)
    : n_(n), matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUncolored), support_(n)
{
}

void PartialColoring::assign(int u, int v, int color)
{
    if (color < 0)
        throw InvalidArgument("negative color id");
    if (colorOf(u, v) != kUncolored)
        throw InvalidArgument("pair already colored");
    const auto sn = static_cast<std::size_t>(n_);
    matrix_[static_cast<std::size_t>(u) * sn + static_cast<std::size_t>(v)] = color;
    matrix_[static_cast<std::size_t>(v) * sn + static_cast<std::size_t>(u)] = color;
    support_.addEdge(u, v);
    if (static_cast<std::size_t>(color) >= classSize_.size())
        classSize_.resize(static_cast<std::size_t>(color) + 1, 0);
    if (classSize_[static_cast<std::size_t>(color)]++ == 0)
        ++distinct_;
}

void PartialColoring::clear(int u, int v)
{
    const int color = colorOf(u, v);
    if (color == kUncolored)
        return;
    const auto sn = static_cast<std::size_t>(n_);
    matrix_[static_cast<std::size_t>(u) * sn + static_cast<std::size_t>(v)] = kUncolored;
    matrix_[static_cast<std::size_t>(v) * sn + static_cast<std::size_t>(u)] = kUncolored;
    support_.removeEdge(u, v);
    if (--classSize_[static_cast<std::size_t>(color)] == 0)
        --distinct_;
}

std::optional<Embedding> findRainbow(const EdgeColoring& c, const LinearForest& f)
{
    const Graph kn = completeGraph(c.order());
    Host host{c.order(), &kn, c.matrix(), c.colorCount(), c.colorCount()};
    return search(host, f, std::nullopt);
}

std::optional<Embedding> findRainbow(const PartialColoring& c, const LinearForest& f, std::optional<Edge> anchor)
{
    Host host{c.order(), &c.support(), c.matrix(), c.colorIdBound(), c.distinctColors()};
    if (host.matrix.empty())
        return std::nullopt;
    return search(host, f, anchor);
}

std::optional<Embedding> containsSubgraph(const Graph& g, const LinearForest& f, std::optional<Edge> anchor)
{
    Host host{g.order(), &g, {}, 0, 0};
    return search(host, f, anchor);
}

}  // namespace antiramsey
