// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "antiramsey/constructions.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/oracles.hpp"
#include "antiramsey/rainbow.hpp"

#include "instances.hpp"
#include "reference.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace antiramsey;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what)
    {
        if (!condition) {
            if (ok)
                detail << "first failure: " << what;
            ok = false;
        }
    }
};

double secondsSince(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report(int id, const std::string& title, const Check& c, double seconds)
{
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << seconds << " s)";
    if (!c.ok)
        std::cout << " -- " << c.detail.str();
    std::cout << '\n';
    return c.ok;
}

bool formulaTable()
{
    const auto start = Clock::now();
    Check c;
    using namespace formulas;
    auto pin = [&](const std::string& what, std::int64_t got, std::int64_t want) {
        c.expect(got == want, what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
    };
    pin("arPath(20,5)", arPath(20, 5).value, 20);
    pin("arPath(20,4)", arPath(20, 4).value, 2);
    pin("arMatching(20,4)", arMatching(20, 4).value, 38);
    pin("arLinearForestMain(20,P5+P4)", arLinearForestMain(20, LinearForest({5, 4})).value, 39);
    pin("arLinearForestMain(20,P4+P2)", arLinearForestMain(20, LinearForest({4, 2})).value, 20);
    pin("exLinearForest(20,P5+P4)", exLinearForest(20, LinearForest({5, 4})).value, 54);
    pin("exLinearForest(20,P5+P3)", exLinearForest(20, LinearForest({5, 3})).value, 38);
    pin("exKP3(14,2)", exKP3(14, 2).value, 19);
    const double s = secondsSince(start);
    c.expect(s < 1.0, "took longer than 1 s");
    return report(1, "formula table", c, s);
}

bool constructionConsistency()
{
    const auto start = Clock::now();
    Check c;
    const std::vector<LinearForest> family{LinearForest({4, 2}), LinearForest({5, 4}), LinearForest({4, 3}),
                                           LinearForest({4, 4}), LinearForest({3, 3, 2})};
    for (const auto& f : family) {
        const int first = f.order() + f.halfSum();
        for (int n = first; n <= first + 10; ++n) {
            const auto tag = f.spec() + " at n=" + std::to_string(n);
            const auto coloring = buildForestColoring(n, f, Arrangement::SingleEdgeSecondColor, Verification::Skip);
            const auto graph = buildTuranExtremal(n, f);
            c.expect(coloring.colorCount() == formulas::arLinearForestMain(n, f).value, "color count for " + tag);
            c.expect(static_cast<std::int64_t>(graph.edgeCount()) == formulas::exLinearForest(n, f).value,
                     "edge count for " + tag);
            // Detector checks cover n <= 12, and always the smallest admissible n.
            if (n <= 12 || n == first) {
                c.expect(!findRainbow(coloring, f), "rainbow copy in coloring for " + tag);
                c.expect(!containsSubgraph(graph, f), "copy in graph for " + tag);
            }
        }
    }
    const double s = secondsSince(start);
    c.expect(s < 10.0, "took longer than 10 s");
    return report(2, "construction consistency", c, s);
}

bool oracleGroundTruth()
{
    const auto start = Clock::now();
    Check c;
    struct Case {
        int n;
        LinearForest f;
        std::int64_t want;
    };
    for (const auto& [n, f, want] : {Case{4, LinearForest({3}), 1}, Case{5, LinearForest({2, 2}), 1},
                                     Case{5, LinearForest({3, 2}), 2}, Case{4, LinearForest({4}), 3}}) {
        const auto t0 = Clock::now();
        const auto r = oracles::bruteForceAR(n, f);
        const auto tag = "AR(" + std::to_string(n) + "," + f.spec() + ")";
        c.expect(r.exhausted, tag + " not exhausted");
        c.expect(r.value == want, tag + " = " + std::to_string(r.value));
        c.expect(oracles::verifyWitness(r, f), tag + " witness rejected");
        c.expect(secondsSince(t0) < 300.0, tag + " over 5 minutes");
    }
    return report(3, "oracle ground truth", c, secondsSince(start));
}

bool erdosGallaiSuite()
{
    const auto start = Clock::now();
    Check c;
    for (int n = 2; n <= 8; ++n)
        for (int k = 2; k <= n; ++k) {
            const auto r = oracles::bruteForceEx(n, path(k));
            const auto bound = formulas::erdosGallaiBound(n, k);
            const auto tag = "ex(" + std::to_string(n) + ",P" + std::to_string(k) + ")";
            c.expect(r.exhausted, tag + " not exhausted");
            c.expect(r.value <= bound.num / bound.den, tag + " = " + std::to_string(r.value) + " above the bound");
        }
    for (int n = 2; n <= 10; ++n) {
        const auto r = oracles::bruteForceEx(n, LinearForest({3}));
        c.expect(r.exhausted && r.value == n / 2, "ex(" + std::to_string(n) + ",P3) = " + std::to_string(r.value));
    }
    const double s = secondsSince(start);
    c.expect(s < 600.0, "took longer than 10 minutes");
    return report(4, "Erdos-Gallai property suite", c, s);
}

bool representingEquivalence()
{
    const auto start = Clock::now();
    Check c;
    std::mt19937_64 rng(20240601);
    const std::vector<LinearForest> forests{LinearForest({2, 2}), LinearForest({3, 2}), LinearForest({4})};
    int agree = 0;
    int positive = 0;
    constexpr int kTrials = 200;
    for (int trial = 0; trial < kTrials; ++trial) {
        const int n = 4 + trial % 3;
        const auto& f = forests[static_cast<std::size_t>(trial) % forests.size()];
        const int maxColors = 1 + static_cast<int>(rng() % pairCount(n));
        const auto coloring = reference::randomColoring(n, maxColors, rng);

        RepresentingEnumerator it(coloring, 100000);
        bool exhaustive = it.totalCount() <= 100000;
        bool anyContains = false;
        while (auto r = it.next())
            if (containsSubgraph(r->graph(), f)) {
                anyContains = true;
                break;
            }
        const auto hit = findRainbow(coloring, f);
        bool same = false;
        if (hit) {
            ++positive;
            // A rainbow copy completes to a representing graph containing F.
            const auto completed = representingFromEmbedding(coloring, *hit);
            same = completed.representsColoring(coloring) && containsSubgraph(completed.graph(), f) && anyContains;
        } else {
            same = exhaustive && !anyContains;
        }
        if (same)
            ++agree;
        else
            c.expect(false, "trial " + std::to_string(trial) + " disagrees");
    }
    c.expect(agree == kTrials, std::to_string(agree) + "/" + std::to_string(kTrials) + " agree");
    c.expect(positive > 0 && positive < kTrials, "only one outcome was exercised");
    return report(5,
                  "representing-graph equivalence (" + std::to_string(agree) + "/200 agree, "
                      + std::to_string(positive) + " with a rainbow copy)",
                  c, secondsSince(start));
}

bool recombinationReplay()
{
    const auto start = Clock::now();
    Check c;
    std::mt19937_64 rng(77);
    int held = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = instances::sampleRecombineInstance(12, 2, 1, 3, rng);
        const auto out = recombineRepresenting(inst.coloring, inst.u, inst.w, inst.s, inst.l1, inst.l2);
        const auto g = out.graph();
        const bool ok = out.representsColoring(inst.coloring) && commonNeighborhood(g, inst.u).count() >= inst.s
                        && commonNeighborhood(g, inst.w).count() >= inst.s;
        if (ok)
            ++held;
        else
            c.expect(false, "instance " + std::to_string(trial));
    }
    return report(6, "recombination replay (" + std::to_string(held) + "/100)", c, secondsSince(start));
}

bool nonReproducibilityNote(bool constructionsPassed, bool groundTruthPassed)
{
    Check c;
    c.expect(constructionsPassed && groundTruthPassed, "substitute criteria 2 and 3 did not both pass");
    std::cout << "NOTE: the exact value of AR(n, F) for n beyond the main theorem's threshold is not checked "
                 "directly: the threshold is unquantified and the exhaustive oracle stops at n <= 6. "
                 "Criteria 2 and 3 stand in for it.\n";
    return report(7, "non-reproducibility note (covered by criteria 2 and 3)", c, 0.0);
}

}  // namespace

int main()
{
    std::cout.setf(std::ios::fixed);
    std::cout.precision(3);
    bool all = true;
    all &= formulaTable();
    const bool second = constructionConsistency();
    const bool third = oracleGroundTruth();
    all &= second;
    all &= third;
    all &= erdosGallaiSuite();
    all &= representingEquivalence();
    all &= recombinationReplay();
    all &= nonReproducibilityNote(second, third);
    std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << '\n';
    return all ? 0 : 1;
}
