#include "antiramsey/graph6.hpp"

#include "antiramsey/errors.hpp"

#include <istream>
#include <ostream>

namespace antiramsey {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void appendSize(std::string& out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    const int groups = n <= 258047 ? 3 : 6;
    out.push_back('~');
    if (groups == 6)
        out.push_back('~');
    for (int i = groups - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((n >> (6 * i)) & 63U) + kBias));
}

int sextet(std::string_view text, std::size_t pos)
{
    if (pos >= text.size())
        throw ParseError("graph6 input truncated", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw ParseError("byte outside graph6 range 63..126", pos);
    return c - kBias;
}

}  // namespace

std::string encodeGraph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    appendSize(out, static_cast<std::uint64_t>(n));
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.hasEdge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph decodeGraph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader)
        pos = kHeader.size();
    if (pos >= text.size())
        throw ParseError("empty graph6 string", pos);

    std::uint64_t n = 0;
    if (text[pos] != '~') {
        n = static_cast<std::uint64_t>(sextet(text, pos));
        ++pos;
    } else {
        int groups = 3;
        ++pos;
        if (pos < text.size() && text[pos] == '~') {
            groups = 6;
            ++pos;
        }
        for (int i = 0; i < groups; ++i, ++pos)
            n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos));
    }
    if (n > 1U << 20)
        throw ParseError("graph order too large", pos);

    const int order = static_cast<int>(n);
    Graph g(order);
    const std::size_t bits = pairCount(order);
    const std::size_t payload = (bits + 5) / 6;
    if (text.size() - pos < payload)
        throw ParseError("graph6 payload truncated", text.size());
    if (text.size() - pos > payload)
        throw ParseError("trailing bytes after graph6 payload", pos + payload);

    std::size_t k = 0;
    int cur = 0;
    for (int v = 1; v < order; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            if (k % 6 == 0)
                cur = sextet(text, pos + k / 6);
            if ((cur >> (5 - k % 6)) & 1)
                g.addEdge(u, v);
        }
    }
    if (bits % 6 != 0) {
        const int padMask = (1 << (6 - bits % 6)) - 1;
        if ((cur & padMask) != 0)
            throw ParseError("nonzero padding bits", pos + payload - 1);
    }
    return g;
}

std::vector<Graph> readGraph6(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        out.push_back(decodeGraph6(line));
    }
    return out;
}

void writeGraph6(std::ostream& out, const Graph& g)
{
    out << encodeGraph6(g) << '\n';
}

}  // namespace antiramsey
