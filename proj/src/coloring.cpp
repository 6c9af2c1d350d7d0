#include "antiramsey/coloring.hpp"

#include "antiramsey/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace antiramsey {

EdgeColoring::EdgeColoring(int n, std::vector<int> colors) : n_(n), byEdge_(std::move(colors))
{
    if (n < 1)
        throw InvalidArgument("coloring needs at least one vertex");
    if (byEdge_.size() != pairCount(n))
        throw InvalidArgument("expected " + std::to_string(pairCount(n)) + " edge colors, got "
                              + std::to_string(byEdge_.size()));
    int maxId = -1;
    for (int c : byEdge_) {
        if (c < 0)
            throw InvalidArgument("negative color id");
        maxId = std::max(maxId, c);
    }
    std::vector<char> seen(static_cast<std::size_t>(maxId + 1), 0);
    for (int c : byEdge_)
        seen[static_cast<std::size_t>(c)] = 1;
    for (std::size_t c = 0; c < seen.size(); ++c)
        if (!seen[c])
            throw InvalidArgument("color ids are not dense: id " + std::to_string(c) + " unused");
    m_ = maxId + 1;

    const auto sn = static_cast<std::size_t>(n);
    matrix_.assign(sn * sn, -1);
    std::size_t i = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++i) {
            matrix_[static_cast<std::size_t>(u) * sn + static_cast<std::size_t>(v)] = byEdge_[i];
            matrix_[static_cast<std::size_t>(v) * sn + static_cast<std::size_t>(u)] = byEdge_[i];
        }
}

EdgeColoring EdgeColoring::monochromatic(int n)
{
    return EdgeColoring(n, std::vector<int>(pairCount(n), 0));
}

EdgeColoring EdgeColoring::rainbow(int n)
{
    std::vector<int> colors(pairCount(n));
    for (std::size_t i = 0; i < colors.size(); ++i)
        colors[i] = static_cast<int>(i);
    return EdgeColoring(n, std::move(colors));
}

std::vector<std::vector<Edge>> EdgeColoring::classes() const
{
    std::vector<std::vector<Edge>> out(static_cast<std::size_t>(m_));
    std::size_t i = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v, ++i)
            out[static_cast<std::size_t>(byEdge_[i])].emplace_back(u, v);
    return out;
}

std::vector<int> firstOccurrenceLabels(std::span<const int> colors)
{
    std::unordered_map<int, int> relabel;
    std::vector<int> out;
    out.reserve(colors.size());
    for (int c : colors) {
        auto [it, inserted] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
        out.push_back(it->second);
    }
    return out;
}

EdgeColoring EdgeColoring::normalized() const
{
    return EdgeColoring(n_, firstOccurrenceLabels(byEdge_));
}

EdgeColoring readColoring(std::istream& in)
{
    std::string line;
    std::size_t lineNo = 0;
    auto nextLine = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineNo;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };

    if (!nextLine())
        throw ParseError("missing coloring header", lineNo + 1);
    long long n = 0;
    long long m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError("header must be `n m`", lineNo);
    }
    if (n < 1 || n > 1 << 16)
        throw ParseError("vertex count out of range", lineNo);

    const int order = static_cast<int>(n);
    std::vector<int> colors(pairCount(order), -1);
    std::size_t assigned = 0;
    while (assigned < colors.size()) {
        if (!nextLine())
            throw ParseError("expected " + std::to_string(colors.size()) + " edge lines, got "
                                 + std::to_string(assigned),
                             lineNo + 1);
        std::istringstream ls(line);
        long long u = 0;
        long long v = 0;
        long long c = 0;
        std::string extra;
        if (!(ls >> u >> v >> c) || (ls >> extra))
            throw ParseError("edge line must be `u v c`", lineNo);
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw ParseError("edge endpoints must satisfy 0 <= u < v < n", lineNo);
        if (c < 0 || c >= m)
            throw ParseError("color id outside 0..m-1", lineNo);
        auto& slot = colors[edgeIndex(order, static_cast<int>(u), static_cast<int>(v))];
        if (slot != -1)
            throw ParseError("duplicate edge", lineNo);
        slot = static_cast<int>(c);
        ++assigned;
    }
    if (nextLine())
        throw ParseError("trailing content after edge list", lineNo);

    try {
        EdgeColoring result(order, std::move(colors));
        if (result.colorCount() != m)
            throw ParseError("header declares " + std::to_string(m) + " colors but "
                                 + std::to_string(result.colorCount()) + " are used",
                             1);
        return result;
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), lineNo);
    }
}

void writeColoring(std::ostream& out, const EdgeColoring& c)
{
    out << c.order() << ' ' << c.colorCount() << '\n';
    std::size_t i = 0;
    for (int u = 0; u < c.order(); ++u)
        for (int v = u + 1; v < c.order(); ++v, ++i)
            out << u << ' ' << v << ' ' << c.byEdge()[i] << '\n';
}

}  // namespace antiramsey
