#include "antiramsey/cli.hpp"

#include "antiramsey/coloring.hpp"
#include "antiramsey/constructions.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/graph6.hpp"
#include "antiramsey/oracles.hpp"
#include "antiramsey/rainbow.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace antiramsey::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct UsageError : Error {
    using Error::Error;
};

void emit(std::ostream& out, const ordered_json& doc)
{
    out << doc.dump() << '\n';
}

int fail(std::ostream& out, const std::string& kind, const std::string& message)
{
    emit(out, ordered_json{{"error", {{"kind", kind}, {"message", message}}}});
    return kUsageError;
}

template <typename T>
const T& require(const std::optional<T>& value, const char* flag)
{
    if (!value)
        throw UsageError(std::string("missing required flag --") + flag);
    return *value;
}

LinearForest forestFrom(const RunConfig& c)
{
    return parseForest(require(c.forestSpec, "forest"));
}

ordered_json embeddingJson(const Embedding& e)
{
    ordered_json j{{"forest", e.forest.spec()}, {"paths", e.paths}};
    if (e.usedColors)
        j["colors"] = *e.usedColors;
    return j;
}

ordered_json formulaJson(const std::string& name, ordered_json inputs, const formulas::FormulaResult& r)
{
    return {{"name", name},
            {"inputs", std::move(inputs)},
            {"value", r.value},
            {"epsilon", r.epsilon ? json(*r.epsilon) : json(nullptr)},
            {"validity", r.validity}};
}

int runFormula(const RunConfig& c, std::ostream& out)
{
    const auto& name = c.formulaName;
    if (name == "ar-path") {
        const auto n = require(c.n, "n");
        const auto k = require(c.k, "k");
        emit(out, formulaJson(name, {{"n", n}, {"k", k}}, formulas::arPath(n, k)));
    } else if (name == "ar-matching") {
        const auto n = require(c.n, "n");
        const auto t = require(c.t, "t");
        emit(out, formulaJson(name, {{"n", n}, {"t", t}}, formulas::arMatching(n, t)));
    } else if (name == "ar-main") {
        const auto n = require(c.n, "n");
        const auto f = forestFrom(c);
        emit(out, formulaJson(name, {{"n", n}, {"forest", f.spec()}}, formulas::arLinearForestMain(n, f)));
    } else if (name == "ar-asymptotic") {
        const auto f = forestFrom(c);
        const int eps = formulas::ParityCensus(f).asymptoticEpsilon();
        emit(out, formulaJson(name, {{"forest", f.spec()}},
                              {formulas::arAsymptoticCoefficient(f), eps, "coefficient of n; O(1) error term"}));
    } else if (name == "eg-bound") {
        const auto n = require(c.n, "n");
        const auto k = require(c.k, "k");
        const auto r = formulas::erdosGallaiBound(n, k);
        emit(out, ordered_json{{"name", name},
                               {"inputs", {{"n", n}, {"k", k}}},
                               {"value", {{"num", r.num}, {"den", r.den}}},
                               {"epsilon", nullptr},
                               {"validity", "all n, k >= 1"}});
    } else if (name == "ex-kp3") {
        const auto n = require(c.n, "n");
        const auto k = require(c.k, "k");
        emit(out, formulaJson(name, {{"n", n}, {"k", k}}, formulas::exKP3(n, k)));
    } else if (name == "ex-forest") {
        const auto n = require(c.n, "n");
        const auto f = forestFrom(c);
        emit(out, formulaJson(name, {{"n", n}, {"forest", f.spec()}}, formulas::exLinearForest(n, f)));
    } else {
        throw UsageError("unknown formula '" + name
                         + "' (expected ar-path, ar-matching, ar-main, ar-asymptotic, eg-bound, ex-kp3, ex-forest)");
    }
    return kSuccess;
}

std::ofstream openOut(const std::string& path)
{
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot write " + path);
    return f;
}

std::ifstream openIn(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw UsageError("cannot read " + path);
    return f;
}

int runConstruct(const RunConfig& c, std::ostream& out)
{
    const int n = static_cast<int>(require(c.n, "n"));
    const auto arrangement = parseArrangement(c.arrangement);
    ordered_json sidecar{{"family", c.family}, {"n", n}};
    std::optional<Embedding> witness;

    if (c.family == "turan") {
        const auto f = forestFrom(c);
        const Graph g = buildTuranExtremal(n, f);
        if (c.verify)
            witness = containsSubgraph(g, f);
        sidecar["forest"] = f.spec();
        sidecar["colors"] = nullptr;
        sidecar["edges"] = g.edgeCount();
        if (c.outPath) {
            auto file = openOut(*c.outPath);
            writeGraph6(file, g);
        }
    } else if (c.family == "path" || c.family == "forest") {
        EdgeColoring coloring;
        LinearForest f = c.family == "path" ? path(require(c.k, "k")) : forestFrom(c);
        if (c.family == "path") {
            coloring = buildPathColoring(n, f.parts().front(), arrangement);
            if (c.verify)
                witness = findRainbow(coloring, f);
        } else {
            try {
                coloring = buildForestColoring(n, f, arrangement, c.verify ? Verification::Run : Verification::Skip);
            } catch (const ConstructionRejected& e) {
                witness = e.witness();
                coloring = buildForestColoring(n, f, arrangement, Verification::Skip);
            }
        }
        sidecar["forest"] = f.spec();
        sidecar["colors"] = coloring.colorCount();
        sidecar["arrangement"] = std::string(toString(arrangement));
        if (c.outPath) {
            auto file = openOut(*c.outPath);
            writeColoring(file, coloring);
        }
    } else {
        throw UsageError("unknown family '" + c.family + "' (expected turan, path, forest)");
    }

    sidecar["verified"] = c.verify && !witness;
    if (witness)
        sidecar["witness"] = embeddingJson(*witness);
    if (c.outPath) {
        auto file = openOut(*c.outPath + ".json");
        file << sidecar.dump(2) << '\n';
    }
    emit(out, sidecar);
    return witness ? kPatternFound : kSuccess;
}

int runVerify(const RunConfig& c, std::ostream& out)
{
    const auto f = forestFrom(c);
    std::optional<Embedding> witness;
    ordered_json doc{{"forest", f.spec()}};
    if (c.coloringPath) {
        auto in = openIn(*c.coloringPath);
        const auto coloring = readColoring(in);
        witness = findRainbow(coloring, f);
        doc["mode"] = "rainbow";
        doc["n"] = coloring.order();
        doc["colors"] = coloring.colorCount();
    } else if (c.graphPath) {
        auto in = openIn(*c.graphPath);
        const auto graphs = readGraph6(in);
        if (graphs.empty())
            throw UsageError("no graph in " + *c.graphPath);
        witness = containsSubgraph(graphs.front(), f);
        doc["mode"] = "subgraph";
        doc["n"] = graphs.front().order();
        doc["edges"] = graphs.front().edgeCount();
    } else {
        throw UsageError("verify needs --coloring or --graph");
    }
    doc["free"] = !witness;
    doc["witness"] = witness ? embeddingJson(*witness) : ordered_json(nullptr);
    emit(out, doc);
    return witness ? kPatternFound : kSuccess;
}

int runSearch(const RunConfig& c, std::ostream& out, oracles::Problem problem)
{
    const int n = static_cast<int>(require(c.n, "n"));
    const auto f = forestFrom(c);
    oracles::SearchBudget budget;
    budget.maxNodes = c.maxNodes;
    budget.maxMillis = std::chrono::milliseconds(c.maxMillis);
    budget.parallelism = c.workers;
    budget.splitDepth = c.splitDepth;

    const auto report = problem == oracles::Problem::AntiRamsey ? oracles::bruteForceAR(n, f, budget)
                                                                : oracles::bruteForceEx(n, f, budget);
    ordered_json doc{{"problem", problem == oracles::Problem::AntiRamsey ? "ar" : "ex"},
                     {"n", n},
                     {"forest", f.spec()},
                     {"value", report.value},
                     {"exhausted", report.exhausted},
                     {"verified", oracles::verifyWitness(report, f)}};
    if (const auto* coloring = std::get_if<EdgeColoring>(&report.witness))
        doc["witness"] = coloring->byEdge();
    else if (const auto* g = std::get_if<Graph>(&report.witness))
        doc["witness"] = encodeGraph6(*g);
    else
        doc["witness"] = nullptr;
    doc["stats"] = {{"nodes", report.stats.nodesVisited},
                    {"prunedByRainbow", report.stats.prunedByRainbow},
                    {"prunedByBound", report.stats.prunedByBound},
                    {"elapsedMillis", report.stats.elapsed.count()}};

    if (c.witnessOut) {
        auto file = openOut(*c.witnessOut);
        if (const auto* coloring = std::get_if<EdgeColoring>(&report.witness))
            writeColoring(file, *coloring);
        else if (const auto* g = std::get_if<Graph>(&report.witness))
            writeGraph6(file, *g);
    }
    emit(out, doc);
    return report.exhausted ? kSuccess : kBudgetExhausted;
}

ordered_json edgesJson(const std::vector<Edge>& edges)
{
    ordered_json j = ordered_json::array();
    for (const auto& e : edges)
        j.push_back({e.u, e.v});
    return j;
}

int runRepresenting(const RunConfig& c, std::ostream& out)
{
    auto in = openIn(require(c.coloringPath, "coloring"));
    const auto coloring = readColoring(in);
    RepresentingEnumerator it(coloring, c.cap);
    ordered_json members = ordered_json::array();
    while (auto r = it.next())
        if (c.listMembers)
            members.push_back(edgesJson(r->chosen));
    ordered_json doc{{"n", coloring.order()},
                     {"colors", coloring.colorCount()},
                     {"totalCount", it.totalCount().str()},
                     {"enumerated", it.yielded()},
                     {"capReached", it.capReached()}};
    if (c.listMembers)
        doc["members"] = std::move(members);
    if (c.seed)
        doc["sample"] = edgesJson(sampleRepresenting(coloring, *c.seed).chosen);
    emit(out, doc);
    return kSuccess;
}

template <typename T>
void envOverride(const char* name, T& field)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return;
    try {
        const long long v = std::stoll(raw);
        if (v > 0)
            field = static_cast<T>(v);
    } catch (const std::exception&) {
        // ignored: a malformed override keeps the built-in default
    }
}

}  // namespace

RunConfig defaultConfig()
{
    RunConfig c;
    envOverride("ANTIRAMSEY_MAX_NODES", c.maxNodes);
    envOverride("ANTIRAMSEY_MAX_MILLIS", c.maxMillis);
    envOverride("ANTIRAMSEY_WORKERS", c.workers);
    return c;
}

int run(const RunConfig& config, std::ostream& out)
{
    try {
        switch (config.subcommand) {
        case Subcommand::Formula:
            return runFormula(config, out);
        case Subcommand::Construct:
            return runConstruct(config, out);
        case Subcommand::Verify:
            return runVerify(config, out);
        case Subcommand::SearchAR:
            return runSearch(config, out, oracles::Problem::AntiRamsey);
        case Subcommand::SearchEx:
            return runSearch(config, out, oracles::Problem::Turan);
        case Subcommand::Representing:
            return runRepresenting(config, out);
        }
    } catch (const UsageError& e) {
        return fail(out, "usage", e.what());
    } catch (const ParseError& e) {
        return fail(out, "parse", e.what());
    } catch (const OutOfValidity& e) {
        return fail(out, "out-of-validity", e.what());
    } catch (const UnsupportedCase& e) {
        return fail(out, "unsupported", e.what());
    } catch (const Error& e) {
        return fail(out, "invalid-argument", e.what());
    }
    return kUsageError;
}

int main(const std::vector<std::string>& args, std::ostream& out)
{
    RunConfig c = defaultConfig();
    CLI::App app{"Anti-Ramsey and Turán numbers of linear forests"};
    app.require_subcommand(1);

    auto addForest = [&](CLI::App* sub) { sub->add_option("--forest", c.forestSpec, "path orders, e.g. 5,4"); };
    auto addN = [&](CLI::App* sub) { sub->add_option("--n", c.n, "number of vertices"); };

    auto* formula = app.add_subcommand("formula", "evaluate a closed-form expression");
    formula->add_option("--name", c.formulaName, "ar-path | ar-matching | ar-main | ar-asymptotic | eg-bound | ex-kp3 | ex-forest")
        ->required();
    addN(formula);
    formula->add_option("--k", c.k, "path order or number of P3 copies");
    formula->add_option("--t", c.t, "matching size");
    addForest(formula);

    auto* construct = app.add_subcommand("construct", "build an extremal graph or coloring");
    construct->add_option("--family", c.family, "turan | path | forest")->required();
    addN(construct);
    construct->add_option("--k", c.k, "path order (family path)");
    addForest(construct);
    construct->add_option("--arrangement", c.arrangement, "single-edge | monochromatic");
    construct->add_option("--out", c.outPath, "write the coloring (or graph6) here, sidecar to <out>.json");
    construct->add_flag("--no-verify", [&](std::int64_t) { c.verify = false; }, "skip the detector check");

    auto* verify = app.add_subcommand("verify", "search a coloring for a rainbow forest, or a graph for a copy");
    verify->add_option("--coloring", c.coloringPath, "coloring file");
    verify->add_option("--graph", c.graphPath, "graph6 file (first graph is used)");
    addForest(verify);

    auto addBudget = [&](CLI::App* sub) {
        addN(sub);
        addForest(sub);
        sub->add_option("--max-nodes", c.maxNodes, "node budget");
        sub->add_option("--max-millis", c.maxMillis, "wall-clock budget in milliseconds");
        sub->add_option("--workers", c.workers, "worker threads");
        sub->add_option("--split-depth", c.splitDepth, "edges expanded into parallel tasks");
        sub->add_option("--witness-out", c.witnessOut, "write the witness coloring or graph here");
    };
    auto* searchAr = app.add_subcommand("search-ar", "exact AR(n, F) by exhaustive search");
    addBudget(searchAr);
    auto* searchEx = app.add_subcommand("search-ex", "exact ex(n, F) by branch and bound");
    addBudget(searchEx);

    auto* representing = app.add_subcommand("representing", "count, list or sample representing graphs");
    representing->add_option("--coloring", c.coloringPath, "coloring file");
    representing->add_option("--cap", c.cap, "maximum members to enumerate");
    representing->add_option("--seed", c.seed, "also draw one uniform sample with this seed");
    representing->add_flag("--list", c.listMembers, "print the enumerated members");

    std::vector<const char*> argv{"antiramsey"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, out);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        return fail(out, "usage", e.what());
    }

    if (formula->parsed())
        c.subcommand = Subcommand::Formula;
    else if (construct->parsed())
        c.subcommand = Subcommand::Construct;
    else if (verify->parsed())
        c.subcommand = Subcommand::Verify;
    else if (searchAr->parsed())
        c.subcommand = Subcommand::SearchAR;
    else if (searchEx->parsed())
        c.subcommand = Subcommand::SearchEx;
    else
        c.subcommand = Subcommand::Representing;
    return run(c, out);
}

}  // namespace antiramsey::cli
