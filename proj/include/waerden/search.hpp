#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace waerden {

struct SearchBudget {
    std::optional<int> max_n;
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> time_limit_seconds;
    int threads = 1;
};

enum class SearchStatus { WitnessFound, NoWitness, BudgetExhausted };

/// Shared bookkeeping for one solve: total nodes, wall-clock deadline and a
/// sticky stop flag raised when the budget runs out.
struct SearchControl {
    std::atomic<std::uint64_t> nodes{0};
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::atomic<bool> stop{false};

    SearchControl() = default;
    explicit SearchControl(const SearchBudget& b) : max_nodes(b.max_nodes) {
        if (b.time_limit_seconds)
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*b.time_limit_seconds));
    }

    // Called every flush; returns true when the search must stop.
    bool note_nodes(std::uint64_t batch) {
        const std::uint64_t total = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
        if (max_nodes && total > *max_nodes) stop.store(true, std::memory_order_relaxed);
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            stop.store(true, std::memory_order_relaxed);
        return stop.load(std::memory_order_relaxed);
    }
};

namespace detail {

enum class DfsOutcome { Found, Exhausted, Aborted };

constexpr std::uint64_t kNodeFlushBatch = 1024;

/// Depth-first search over a Domain.  A Domain owns the incremental state
/// and exposes:
///   int  slots()                                      total decisions
///   void candidates(int slot, std::vector<int>& out)  admissible choices, in order
///   void push(int slot, int choice) / void pop(int slot, int choice)
///
/// The first witness in candidate order is the lexicographically least
/// admissible assignment, which is what gets reported everywhere.
template <typename Domain>
struct DfsRunner {
    Domain& dom;
    SearchControl& ctl;
    const std::atomic<std::size_t>* best_task = nullptr;  // parallel preemption
    std::size_t task_index = 0;
    std::vector<int> assignment;
    std::vector<std::vector<int>> bufs;
    std::uint64_t pending_nodes = 0;
    bool aborted_by_budget = false;

    DfsRunner(Domain& d, SearchControl& c) : dom(d), ctl(c) {
        assignment.assign(static_cast<std::size_t>(dom.slots()), -1);
        bufs.resize(static_cast<std::size_t>(dom.slots()));
    }

    ~DfsRunner() {
        if (pending_nodes) ctl.note_nodes(pending_nodes);
    }

    bool should_abort() {
        if (pending_nodes >= kNodeFlushBatch) {
            if (ctl.note_nodes(pending_nodes)) {
                pending_nodes = 0;
                aborted_by_budget = true;
                return true;
            }
            pending_nodes = 0;
        }
        if (ctl.stop.load(std::memory_order_relaxed)) {
            aborted_by_budget = true;
            return true;
        }
        if (best_task && best_task->load(std::memory_order_relaxed) < task_index) return true;
        return false;
    }

    DfsOutcome run(int depth) {
        if (depth == dom.slots()) return DfsOutcome::Found;
        if (should_abort()) return DfsOutcome::Aborted;
        // each depth owns its buffer, so deeper frames cannot clobber it
        auto& cands = bufs[static_cast<std::size_t>(depth)];
        dom.candidates(depth, cands);
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            const int choice = cands[ci];
            ++pending_nodes;
            assignment[static_cast<std::size_t>(depth)] = choice;
            dom.push(depth, choice);
            const DfsOutcome sub = run(depth + 1);
            dom.pop(depth, choice);
            // the domain is always left as found; assignment keeps the witness
            if (sub == DfsOutcome::Found) return sub;
            assignment[static_cast<std::size_t>(depth)] = -1;
            if (sub == DfsOutcome::Aborted) return sub;
        }
        return DfsOutcome::Exhausted;
    }
};

/// Enumerates admissible prefixes of the domain's tree in DFS order until
/// at least `target` of them exist (or the tree is shallower than that).
/// Returns std::nullopt when enumeration exhausted the whole tree, which
/// proves there is no witness.
template <typename Domain>
std::optional<std::vector<std::vector<int>>> enumerate_prefixes(Domain& dom, std::size_t target) {
    std::vector<std::vector<int>> level{{}};
    const int max_depth = dom.slots() - 1;
    std::vector<int> cands;
    for (int depth = 0; depth < max_depth && level.size() < target; ++depth) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : level) {
            for (std::size_t i = 0; i < prefix.size(); ++i)
                dom.push(static_cast<int>(i), prefix[i]);
            dom.candidates(depth, cands);
            for (int choice : cands) {
                auto child = prefix;
                child.push_back(choice);
                next.push_back(std::move(child));
            }
            for (std::size_t i = prefix.size(); i-- > 0;)
                dom.pop(static_cast<int>(i), prefix[i]);
        }
        level = std::move(next);
        if (level.empty()) return std::nullopt;
    }
    return level;
}

struct RawSearchResult {
    SearchStatus status;
    std::vector<int> witness;  // meaningful when status == WitnessFound
};

/// Single-threaded search; DFS order defines the canonical witness.
template <typename Domain>
RawSearchResult sequential_search(Domain& dom, SearchControl& ctl) {
    DfsRunner<Domain> runner(dom, ctl);
    const DfsOutcome out = runner.run(0);
    if (out == DfsOutcome::Found) return {SearchStatus::WitnessFound, runner.assignment};
    if (out == DfsOutcome::Exhausted) return {SearchStatus::NoWitness, {}};
    return {SearchStatus::BudgetExhausted, {}};
}

/// Parallel search over root prefixes.  Workers pull prefixes in DFS order;
/// a found witness preempts only the tasks that come after its prefix, so
/// the reported witness is the same one the sequential search would find,
/// independent of scheduling.
template <typename DomainFactory>
RawSearchResult parallel_search(DomainFactory&& make_domain, SearchControl& ctl, int threads) {
    auto probe = make_domain();
    const std::size_t target = std::min<std::size_t>(4096, static_cast<std::size_t>(threads) * 32);
    auto prefixes = enumerate_prefixes(probe, target);
    if (!prefixes) return {SearchStatus::NoWitness, {}};
    auto& tasks = *prefixes;

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{SIZE_MAX};
    std::vector<std::optional<std::vector<int>>> found(tasks.size());
    std::atomic<bool> incomplete{false};

    auto worker = [&]() {
        auto dom = make_domain();
        while (true) {
            const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
            if (t >= tasks.size()) return;
            if (best.load(std::memory_order_relaxed) < t) continue;
            if (ctl.stop.load(std::memory_order_relaxed)) {
                incomplete.store(true, std::memory_order_relaxed);
                continue;
            }
            const auto& prefix = tasks[t];
            for (std::size_t i = 0; i < prefix.size(); ++i)
                dom.push(static_cast<int>(i), prefix[i]);
            DfsRunner<std::decay_t<decltype(dom)>> runner(dom, ctl);
            runner.best_task = &best;
            runner.task_index = t;
            for (std::size_t i = 0; i < prefix.size(); ++i)
                runner.assignment[i] = prefix[i];
            const DfsOutcome out = runner.run(static_cast<int>(prefix.size()));
            if (out == DfsOutcome::Found) {
                found[t] = runner.assignment;
                std::size_t cur = best.load(std::memory_order_relaxed);
                while (t < cur && !best.compare_exchange_weak(cur, t)) {
                }
            } else if (out == DfsOutcome::Aborted && runner.aborted_by_budget) {
                incomplete.store(true, std::memory_order_relaxed);
            }
            for (std::size_t i = prefix.size(); i-- > 0;)
                dom.pop(static_cast<int>(i), prefix[i]);
        }
    };

    {
        std::vector<std::jthread> pool;
        const int count = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
        pool.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    }

    for (auto& w : found)
        if (w) return {SearchStatus::WitnessFound, *w};
    if (incomplete.load() || ctl.stop.load()) return {SearchStatus::BudgetExhausted, {}};
    return {SearchStatus::NoWitness, {}};
}

template <typename DomainFactory>
RawSearchResult run_search(DomainFactory&& make_domain, SearchControl& ctl, int threads) {
    if (threads > 1) {
        auto probe = make_domain();
        if (probe.slots() > 1) return parallel_search(make_domain, ctl, threads);
    }
    auto dom = make_domain();
    return sequential_search(dom, ctl);
}

}  // namespace detail
}  // namespace waerden
