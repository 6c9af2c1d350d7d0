#include "antiramsey/coloring.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/forest.hpp"
#include "antiramsey/graph.hpp"
#include "antiramsey/graph6.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace antiramsey;

namespace {

Graph star(int n)
{
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.addEdge(0, v);
    return g;
}

}  // namespace

TEST_CASE("completeGraph edge counts")
{
    CHECK(completeGraph(1).edgeCount() == 0);
    CHECK(completeGraph(4).edgeCount() == 6);
    CHECK(completeGraph(10).edgeCount() == 45);
    CHECK_THROWS_AS(completeGraph(0), InvalidArgument);
}

TEST_CASE("graph adjacency stays symmetric and loop-free")
{
    Graph g(70);  // spans two words per row
    g.addEdge(3, 65);
    g.addEdge(65, 3);
    CHECK(g.edgeCount() == 1);
    CHECK(g.hasEdge(65, 3));
    CHECK(g.neighbors(3).contains(65));
    CHECK_FALSE(g.hasEdge(3, 3));
    CHECK_THROWS_AS(g.addEdge(4, 4), InvalidArgument);
    CHECK_THROWS_AS(g.addEdge(4, 70), InvalidArgument);
    g.removeEdge(3, 65);
    CHECK(g.edgeCount() == 0);
}

TEST_CASE("commonNeighborhood examples")
{
    CHECK(commonNeighborhood(completeGraph(5), std::vector<int>{0, 1}).members() == std::vector<int>{2, 3, 4});

    const Graph p3(3, std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(commonNeighborhood(p3, std::vector<int>{0, 2}).members() == std::vector<int>{1});

    CHECK(commonNeighborhood(star(6), std::vector<int>{1, 2}).members() == std::vector<int>{0});

    CHECK(commonNeighborhood(p3, std::vector<int>{}).count() == 3);
    CHECK_THROWS_AS(commonNeighborhood(p3, std::vector<int>{3}), InvalidArgument);
}

TEST_CASE("commonNeighborhood is antitone in the vertex set")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 20);
        const Graph g = reference::randomGraph(n, 0.6, rng);
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (rng() % 4 == 0)
                s.push_back(v);
        const auto base = commonNeighborhood(g, s);
        const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        s.push_back(extra);
        CHECK(commonNeighborhood(g, s).isSubsetOf(base));
    }
}

TEST_CASE("graph6 matches reference encodings")
{
    CHECK(encodeGraph6(completeGraph(1)) == "@");
    CHECK(encodeGraph6(completeGraph(4)) == "C~");
    CHECK(encodeGraph6(Graph(3, std::vector<Edge>{{0, 1}, {1, 2}})) == "Bg");

    const std::vector<Edge> petersen{{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                     {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
    CHECK(encodeGraph6(Graph(10, petersen)) == "IheA@GUAo");
    CHECK(decodeGraph6("IheA@GUAo") == Graph(10, petersen));
    CHECK(decodeGraph6(">>graph6<<C~") == completeGraph(4));

    const auto k63 = encodeGraph6(completeGraph(63));
    CHECK(k63.size() == 330);
    CHECK(k63.substr(0, 4) == "~??~");
    CHECK(decodeGraph6(k63).edgeCount() == 1953);
}

TEST_CASE("graph6 round trip on random graphs")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        const Graph g = reference::randomGraph(n, 0.4, rng);
        const auto text = encodeGraph6(g);
        const Graph back = decodeGraph6(text);
        CHECK(back == g);
        CHECK(encodeGraph6(back) == text);
    }
    const Graph g7 = reference::randomGraph(7, 0.5, rng);
    CHECK(decodeGraph6(encodeGraph6(g7)).edgeCount() == g7.edgeCount());
}

TEST_CASE("graph6 decode errors report the byte offset")
{
    auto offsetOf = [](std::string_view text) -> std::size_t {
        try {
            decodeGraph6(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return std::string_view::npos;
    };
    CHECK(offsetOf("") == 0);
    CHECK(offsetOf("C") == 1);        // K4 needs one payload byte
    CHECK(offsetOf("C~~") == 2);      // trailing byte
    CHECK(offsetOf("C!") == 1);       // below the printable range
    CHECK(offsetOf("~?") == 2);       // truncated long header
    CHECK(offsetOf("Bh") == 1);       // padding bits set
}

TEST_CASE("graph6 streams one graph per line")
{
    std::stringstream io;
    writeGraph6(io, completeGraph(4));
    io << "\n";
    writeGraph6(io, completeGraph(1));
    const auto graphs = readGraph6(io);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == completeGraph(4));
    CHECK(graphs[1].order() == 1);
}

TEST_CASE("LinearForest normalizes and derives its counts")
{
    const LinearForest f({2, 5, 4});
    CHECK(f.parts() == std::vector<int>{5, 4, 2});
    CHECK(f.order() == 11);
    CHECK(f.edgeCount() == 8);
    CHECK(f.halfSum() == 5);
    CHECK(f.evenCount() == 2);
    CHECK(f.spec() == "5,4,2");
    CHECK(parseForest(" 4, 5 ") == LinearForest({5, 4}));
    CHECK(LinearForest({3, 3}).allOdd());
    CHECK_THROWS_AS(LinearForest({}), InvalidArgument);
    CHECK_THROWS_AS(LinearForest({4, 1}), InvalidArgument);
    CHECK_THROWS_AS(parseForest("4,x"), ParseError);
    CHECK_THROWS_AS(parseForest("4,,2"), ParseError);
}

TEST_CASE("EdgeColoring requires a dense surjective id range")
{
    CHECK_NOTHROW(EdgeColoring(3, {0, 1, 0}));
    CHECK_THROWS_AS(EdgeColoring(3, {0, 2, 0}), InvalidArgument);
    CHECK_THROWS_AS(EdgeColoring(3, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(EdgeColoring(3, {0, -1, 0}), InvalidArgument);

    const EdgeColoring c(4, {2, 0, 1, 1, 0, 2});
    CHECK(c.colorCount() == 3);
    CHECK(c.colorOf(1, 0) == 2);
    CHECK(c.colorOf(2, 3) == 2);
    const auto cls = c.classes();
    CHECK(cls[1] == std::vector<Edge>{{0, 3}, {1, 2}});
}

TEST_CASE("normalization makes relabeled colorings equal")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = reference::randomColoring(6, 5, rng);
        auto perm = reference::randomPermutation(c.colorCount(), rng);
        std::vector<int> relabeled;
        for (int x : c.byEdge())
            relabeled.push_back(perm[static_cast<std::size_t>(x)]);
        const EdgeColoring d(6, relabeled);
        CHECK(d.normalized() == c.normalized());
        int maxId = -1;
        for (int x : d.byEdge())
            maxId = std::max(maxId, x);
        CHECK(maxId + 1 == d.colorCount());
    }
}

TEST_CASE("coloring file round trip and parse errors")
{
    const EdgeColoring c(4, {2, 0, 1, 1, 0, 2});
    std::stringstream io;
    writeColoring(io, c);
    CHECK(io.str().substr(0, 4) == "4 3\n");
    CHECK(readColoring(io) == c);

    auto lineOf = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            readColoring(in);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return 0;
    };
    CHECK(lineOf("") == 1);
    CHECK(lineOf("3\n") == 1);
    CHECK(lineOf("3 2\n0 1 0\n0 2 1\n") == 4);             // missing pair (1,2)
    CHECK(lineOf("3 2\n0 1 0\n0 1 1\n1 2 0\n") == 3);      // duplicate
    CHECK(lineOf("3 2\n0 1 0\n2 1 1\n1 2 0\n") == 3);      // u >= v
    CHECK(lineOf("3 2\n0 1 0\n0 2 5\n1 2 0\n") == 3);      // color out of range
    CHECK(lineOf("3 3\n0 1 0\n0 2 1\n1 2 0\n") == 1);      // declared 3, used 2
    CHECK(lineOf("3 2\n0 1 0\n0 2 1\n1 2 0\n9 9 9\n") == 5);
}
