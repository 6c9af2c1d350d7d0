#include "antiramsey/oracles.hpp"

#include "antiramsey/errors.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/rainbow.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

namespace antiramsey::oracles {

namespace {

using Clock = std::chrono::steady_clock;

// State shared by all workers of one search. The incumbent only grows, so a
// worker reading a stale value merely prunes less.
class SharedSearch {
public:
    explicit SharedSearch(const SearchBudget& budget) : budget_(budget), start_(Clock::now()) {}

    std::int64_t best() const noexcept { return best_.load(std::memory_order_relaxed); }
    bool stopped() const noexcept { return stop_.load(std::memory_order_relaxed); }

    // Counts a node; returns false once the budget is spent.
    bool enter() noexcept
    {
        const auto visited = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (visited > budget_.maxNodes)
            stop_.store(true, std::memory_order_relaxed);
        else if ((visited & 1023U) == 0 && Clock::now() - start_ > budget_.maxMillis)
            stop_.store(true, std::memory_order_relaxed);
        return !stopped();
    }

    void prunedByPattern() noexcept { rainbow_.fetch_add(1, std::memory_order_relaxed); }
    void prunedByBound() noexcept { bound_.fetch_add(1, std::memory_order_relaxed); }

    void offer(std::int64_t value, const std::function<Witness()>& makeWitness)
    {
        auto current = best_.load(std::memory_order_relaxed);
        while (value > current && !best_.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
        }
        std::lock_guard lock(mutex_);
        if (value > witnessValue_) {
            witnessValue_ = value;
            witness_ = makeWitness();
        }
    }

    SearchReport report(Problem problem, int n) const
    {
        SearchReport r;
        r.problem = problem;
        r.n = n;
        r.value = std::max<std::int64_t>(witnessValue_, 0);
        r.witness = witness_;
        r.exhausted = !stopped();
        r.stats.nodesVisited = nodes_.load();
        r.stats.prunedByRainbow = rainbow_.load();
        r.stats.prunedByBound = bound_.load();
        r.stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
        return r;
    }

private:
    SearchBudget budget_;
    Clock::time_point start_;
    std::atomic<std::int64_t> best_{0};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<std::uint64_t> rainbow_{0};
    std::atomic<std::uint64_t> bound_{0};
    std::atomic<bool> stop_{false};
    std::mutex mutex_;
    std::int64_t witnessValue_ = -1;
    Witness witness_;
};

// Runs `work(task)` for every task, on up to `parallelism` threads pulling
// from a shared counter.
template <typename Task, typename Work>
void runTasks(const std::vector<Task>& tasks, int parallelism, Work&& work)
{
    const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(
        static_cast<std::size_t>(parallelism), 1, std::max<std::size_t>(tasks.size(), 1)));
    std::atomic<std::size_t> nextTask{0};
    auto loop = [&]() {
        for (std::size_t i = nextTask.fetch_add(1); i < tasks.size(); i = nextTask.fetch_add(1))
            work(tasks[i]);
    };
    if (workers == 1) {
        loop();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i)
        pool.emplace_back(loop);
}

// All restricted-growth strings of the given length, those opening more
// blocks first.
std::vector<std::vector<int>> growthPrefixes(int length)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int blocks) {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int c = blocks; c >= 0; --c) {
            cur.push_back(c);
            rec(c == blocks ? blocks + 1 : blocks);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

class ColoringSearch {
public:
    ColoringSearch(int n, const LinearForest& f, SharedSearch& shared)
        : n_(n), forest_(f), shared_(shared), edges_(lexicographicPairs(n)), coloring_(n), labels_(edges_.size(), -1)
    {
    }

    void runPrefix(const std::vector<int>& prefix)
    {
        int blocks = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (!shared_.enter())
                return;
            if (!assign(i, prefix[i])) {
                shared_.prunedByPattern();
                return;
            }
            blocks = std::max(blocks, prefix[i] + 1);
        }
        descend(prefix.size(), blocks);
    }

private:
    // Colors edge i; false (and undone) if that creates a rainbow copy.
    bool assign(std::size_t i, int color)
    {
        const Edge& e = edges_[i];
        coloring_.assign(e.u, e.v, color);
        labels_[i] = color;
        if (findRainbow(coloring_, forest_, e)) {
            unassign(i);
            return false;
        }
        return true;
    }

    void unassign(std::size_t i)
    {
        coloring_.clear(edges_[i].u, edges_[i].v);
        labels_[i] = -1;
    }

    void descend(std::size_t i, int blocks)
    {
        const std::size_t total = edges_.size();
        if (i == total) {
            if (blocks > shared_.best())
                shared_.offer(blocks, [&]() -> Witness { return EdgeColoring(n_, labels_); });
            return;
        }
        const auto remainingAfter = static_cast<std::int64_t>(total - i - 1);
        for (int c = blocks; c >= 0; --c) {
            if (shared_.stopped())
                return;
            const int nextBlocks = c == blocks ? blocks + 1 : blocks;
            if (nextBlocks + remainingAfter <= shared_.best()) {
                shared_.prunedByBound();
                continue;
            }
            if (!shared_.enter())
                return;
            if (!assign(i, c)) {
                shared_.prunedByPattern();
                continue;
            }
            descend(i + 1, nextBlocks);
            unassign(i);
        }
    }

    int n_;
    const LinearForest& forest_;
    SharedSearch& shared_;
    std::vector<Edge> edges_;
    PartialColoring coloring_;
    std::vector<int> labels_;
};

class GraphSearch {
public:
    GraphSearch(int n, const LinearForest& f, std::int64_t cap, SharedSearch& shared)
        : forest_(f), cap_(cap), shared_(shared), edges_(lexicographicPairs(n)), graph_(n)
    {
    }

    void runPrefix(const std::vector<bool>& prefix)
    {
        std::int64_t included = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (!shared_.enter())
                return;
            if (!prefix[i])
                continue;
            if (!include(i)) {
                shared_.prunedByPattern();
                return;
            }
            ++included;
        }
        descend(prefix.size(), included);
    }

private:
    bool include(std::size_t i)
    {
        const Edge& e = edges_[i];
        graph_.addEdge(e.u, e.v);
        if (containsSubgraph(graph_, forest_, e)) {
            graph_.removeEdge(e.u, e.v);
            return false;
        }
        return true;
    }

    void descend(std::size_t i, std::int64_t included)
    {
        if (shared_.stopped())
            return;
        const std::size_t total = edges_.size();
        const std::int64_t bound = std::min(included + static_cast<std::int64_t>(total - i), cap_);
        if (bound <= shared_.best()) {
            shared_.prunedByBound();
            return;
        }
        if (i == total) {
            shared_.offer(included, [&]() -> Witness { return graph_; });
            return;
        }
        if (!shared_.enter())
            return;
        if (include(i)) {
            descend(i + 1, included + 1);
            graph_.removeEdge(edges_[i].u, edges_[i].v);
        } else {
            shared_.prunedByPattern();
        }
        descend(i + 1, included);
    }

    const LinearForest& forest_;
    std::int64_t cap_;
    SharedSearch& shared_;
    std::vector<Edge> edges_;
    Graph graph_;
};

void checkOrder(int n)
{
    if (n < 1)
        throw InvalidArgument("n must be at least 1");
    if (n > 16)
        throw InvalidArgument("exhaustive search is limited to n <= 16");
}

}  // namespace

void SearchBudget::validate() const
{
    if (maxNodes == 0 || maxMillis.count() <= 0 || parallelism < 1 || splitDepth < 0)
        throw InvalidArgument("search budget fields must be positive");
}

SearchReport bruteForceAR(int n, const LinearForest& f, const SearchBudget& budget)
{
    checkOrder(n);
    budget.validate();
    SharedSearch shared(budget);
    const int depth = std::min<int>(budget.parallelism > 1 ? budget.splitDepth : 0, static_cast<int>(pairCount(n)));
    runTasks(growthPrefixes(depth), budget.parallelism, [&](const std::vector<int>& prefix) {
        ColoringSearch(n, f, shared).runPrefix(prefix);
    });
    return shared.report(Problem::AntiRamsey, n);
}

SearchReport bruteForceEx(int n, const LinearForest& f, const SearchBudget& budget)
{
    checkOrder(n);
    budget.validate();
    auto cap = static_cast<std::int64_t>(pairCount(n));
    if (f.componentCount() == 1) {
        const auto eg = formulas::erdosGallaiBound(n, f.parts().front());
        cap = std::min(cap, std::max<std::int64_t>(0, eg.num / eg.den));
    }
    SharedSearch shared(budget);
    shared.offer(0, [n]() -> Witness { return Graph(n); });
    const int depth = std::min<int>(budget.parallelism > 1 ? budget.splitDepth : 0, static_cast<int>(pairCount(n)));
    std::vector<std::vector<bool>> prefixes;
    for (std::uint32_t mask = 0; mask < (1U << depth); ++mask) {
        std::vector<bool> p(static_cast<std::size_t>(depth));
        for (int b = 0; b < depth; ++b)
            p[static_cast<std::size_t>(b)] = ((mask >> (depth - 1 - b)) & 1U) == 0;  // include-first order
        prefixes.push_back(std::move(p));
    }
    runTasks(prefixes, budget.parallelism, [&](const std::vector<bool>& prefix) {
        GraphSearch(n, f, cap, shared).runPrefix(prefix);
    });
    return shared.report(Problem::Turan, n);
}

bool verifyWitness(const SearchReport& report, const LinearForest& f)
{
    if (std::holds_alternative<std::monostate>(report.witness))
        return report.value == 0;
    if (report.problem == Problem::AntiRamsey) {
        const auto* c = std::get_if<EdgeColoring>(&report.witness);
        return c != nullptr && c->order() == report.n && c->colorCount() == report.value && !findRainbow(*c, f);
    }
    const auto* g = std::get_if<Graph>(&report.witness);
    return g != nullptr && g->order() == report.n && static_cast<std::int64_t>(g->edgeCount()) == report.value
           && !containsSubgraph(*g, f);
}

}  // namespace antiramsey::oracles
