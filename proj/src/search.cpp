#include "mramsey/search.hpp"

#include <atomic>
#include <chrono>
#include <climits>
#include <cstdio>
#include <numeric>
#include <thread>

#include "mramsey/detect.hpp"

namespace mramsey {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Colorable: return "colorable";
        case Verdict::NotColorable: return "not_colorable";
        case Verdict::BudgetExhausted: return "budget";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Edge permutations induced by generator vertex automorphisms of K_{j x t}:
// adjacent transpositions inside each part, plus adjacent part swaps.
// All are involutions.
std::vector<std::vector<int>> edge_generators(const EdgeTable& host) {
    const PartitionShape shape = *host.shape();
    int j = shape.parts, t = shape.class_size, n = shape.vertex_count();
    std::vector<std::vector<int>> perms;
    std::vector<int> vp(n);
    auto push = [&]() {
        std::vector<int> ep(host.edge_count());
        for (int e = 0; e < host.edge_count(); ++e) {
            auto [u, v] = host.endpoints(e);
            ep[e] = host.id_of(vp[u], vp[v]);
        }
        perms.push_back(std::move(ep));
    };
    for (int i = 0; i < j; ++i)
        for (int s = 0; s + 1 < t; ++s) {
            std::iota(vp.begin(), vp.end(), 0);
            std::swap(vp[i * t + s], vp[i * t + s + 1]);
            push();
        }
    for (int i = 0; i + 1 < j; ++i) {
        std::iota(vp.begin(), vp.end(), 0);
        for (int s = 0; s < t; ++s) std::swap(vp[i * t + s], vp[(i + 1) * t + s]);
        push();
    }
    return perms;
}

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<int> winner{INT_MAX};  // least task index that found a coloring
    std::atomic<bool> out_of_budget{false};
    std::atomic<int> max_depth{0};
    std::uint64_t node_budget = 0;
    Clock::time_point deadline;

    void bump_depth(int d) {
        int cur = max_depth.load(std::memory_order_relaxed);
        while (d > cur && !max_depth.compare_exchange_weak(cur, d)) {
        }
    }
};

enum class TaskResult { Colorable, NotColorable, Budget, Shadowed };

struct Worker {
    const EdgeTable& host;
    const ColoringProblem& problem;
    const SearchConfig& cfg;
    const std::vector<std::vector<int>>& perms;
    const std::vector<int>& group_prev;
    Shared& shared;
    int task_index = 0;

    int E, r;
    std::vector<std::int8_t> word;
    std::vector<EdgeSet> cls;
    std::vector<int> used;
    int max_depth = 0;
    std::uint64_t pending = 0;
    bool shadowed = false;
    std::optional<Certificate> cert;

    Worker(const EdgeTable& host, const ColoringProblem& problem, const SearchConfig& cfg,
           const std::vector<std::vector<int>>& perms, const std::vector<int>& group_prev,
           Shared& shared)
        : host(host), problem(problem), cfg(cfg), perms(perms), group_prev(group_prev),
          shared(shared), E(host.edge_count()), r(problem.colors()), word(E, -1),
          cls(r, EdgeSet(E)), used(r, 0) {}

    void load_prefix(const std::vector<std::int8_t>& prefix) {
        for (int k = 0; k < static_cast<int>(prefix.size()); ++k) {
            word[k] = prefix[k];
            cls[prefix[k]].set(k);
            ++used[prefix[k]];
        }
    }

    bool aborted() {
        ++pending;
        if ((pending & 255) == 0) {
            shared.nodes.fetch_add(256, std::memory_order_relaxed);
            if (shared.nodes.load(std::memory_order_relaxed) > shared.node_budget ||
                Clock::now() > shared.deadline)
                shared.out_of_budget.store(true, std::memory_order_relaxed);
            if (shared.winner.load(std::memory_order_relaxed) < task_index) shadowed = true;
        }
        return shadowed || shared.out_of_budget.load(std::memory_order_relaxed);
    }

    void finish_counts() {
        shared.nodes.fetch_add(pending & 255, std::memory_order_relaxed);
        shared.bump_depth(max_depth);
    }

    // true when some generator maps the assigned prefix to a lex-smaller word
    // on the positions where both sides are defined
    bool symmetric_smaller(int k) const {
        for (const auto& p : perms) {
            for (int q = 0; q <= k; ++q) {
                int mq = p[q];
                if (mq > k) break;
                std::int8_t a = word[q], b = word[mq];
                if (b < a) return true;
                if (b > a) break;
            }
        }
        return false;
    }

    // skip colors whose identical-target predecessor is still unused: the
    // lex-least coloring uses identical-target colors in first-occurrence order
    bool precedence_blocked(int c) const {
        return group_prev[c] >= 0 && used[group_prev[c]] == 0;
    }

    TaskResult dfs(int k) {
        if (k == E) {
            build_certificate();
            return TaskResult::Colorable;
        }
        for (int c = 0; c < r; ++c) {
            if (precedence_blocked(c)) continue;
            if (aborted()) return shadowed ? TaskResult::Shadowed : TaskResult::Budget;
            if (k + 1 > max_depth) max_depth = k + 1;
            if (extends_to_pattern(host, cls[c], k, problem.targets[c])) continue;
            word[k] = static_cast<std::int8_t>(c);
            cls[c].set(k);
            ++used[c];
            if (!(cfg.symmetry && symmetric_smaller(k))) {
                TaskResult v = dfs(k + 1);
                if (v != TaskResult::NotColorable) return v;
            }
            word[k] = -1;
            cls[c].reset(k);
            --used[c];
        }
        return TaskResult::NotColorable;
    }

    // same walk cut at depth d, collecting surviving prefixes instead of recursing
    void enumerate(int k, int d, std::vector<std::vector<std::int8_t>>& out) {
        if (k == d) {
            out.emplace_back(word.begin(), word.begin() + d);
            return;
        }
        for (int c = 0; c < r; ++c) {
            if (precedence_blocked(c)) continue;
            if (aborted()) return;
            if (k + 1 > max_depth) max_depth = k + 1;
            if (extends_to_pattern(host, cls[c], k, problem.targets[c])) continue;
            word[k] = static_cast<std::int8_t>(c);
            cls[c].set(k);
            ++used[c];
            if (!(cfg.symmetry && symmetric_smaller(k))) enumerate(k + 1, d, out);
            word[k] = -1;
            cls[c].reset(k);
            --used[c];
            if (shadowed || shared.out_of_budget.load(std::memory_order_relaxed)) return;
        }
    }

    void build_certificate() {
        EdgeColoring col(E, r);
        for (int e = 0; e < E; ++e) col.set_color(e, word[e]);
        Certificate c{problem, std::move(col), "search:backtrack"};
        if (!verify_certificate(c).pass)
            throw std::logic_error("search produced a coloring that fails verification");
        cert = std::move(c);
    }
};

}  // namespace

SearchOutcome decide_colorable(const ColoringProblem& problem, const SearchConfig& cfg) {
    EdgeTable host(problem.shape);
    if (problem.colors() < 1) throw DomainError("problem needs at least one color");

    // degenerate targets that sit in an empty class (P_1, P_2 with no edges, ...)
    EdgeSet empty(host.edge_count());
    for (int c = 0; c < problem.colors(); ++c)
        if (contains_pattern(host, empty, problem.targets[c]).found)
            return {Verdict::NotColorable, std::nullopt, 0, 0};

    auto perms = edge_generators(host);
    std::vector<int> group_prev(problem.colors(), -1);
    for (int c = 0; c < problem.colors(); ++c)
        for (int b = c - 1; b >= 0; --b)
            if (problem.targets[b] == problem.targets[c]) {
                group_prev[c] = b;
                break;
            }

    Shared shared;
    shared.node_budget = cfg.node_budget;
    shared.deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(cfg.time_budget_seconds));

    auto outcome = [&](Verdict v, std::optional<Certificate> cert) -> SearchOutcome {
        return {v, std::move(cert), shared.nodes.load(), shared.max_depth.load()};
    };

    int width = std::max(1, cfg.parallel_width);
    if (width == 1 || host.edge_count() == 0) {
        Worker w(host, problem, cfg, perms, group_prev, shared);
        TaskResult res = w.dfs(0);
        w.finish_counts();
        switch (res) {
            case TaskResult::Colorable: return outcome(Verdict::Colorable, std::move(w.cert));
            case TaskResult::NotColorable: return outcome(Verdict::NotColorable, std::nullopt);
            default: return outcome(Verdict::BudgetExhausted, std::nullopt);
        }
    }

    int depth = 0;
    while ((1 << depth) < width && depth < host.edge_count()) ++depth;

    Worker master(host, problem, cfg, perms, group_prev, shared);
    std::vector<std::vector<std::int8_t>> prefixes;
    master.enumerate(0, depth, prefixes);
    master.finish_counts();
    if (shared.out_of_budget.load()) return outcome(Verdict::BudgetExhausted, std::nullopt);

    std::vector<TaskResult> results(prefixes.size(), TaskResult::Shadowed);
    std::vector<std::optional<Certificate>> certs(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            if (static_cast<int>(i) > shared.winner.load()) continue;  // stays Shadowed
            Worker w(host, problem, cfg, perms, group_prev, shared);
            w.task_index = static_cast<int>(i);
            w.load_prefix(prefixes[i]);
            TaskResult v = w.dfs(static_cast<int>(prefixes[i].size()));
            w.finish_counts();
            results[i] = v;
            certs[i] = std::move(w.cert);
            if (v == TaskResult::Colorable) {
                int expect = shared.winner.load();
                while (static_cast<int>(i) < expect &&
                       !shared.winner.compare_exchange_weak(expect, static_cast<int>(i))) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < width; ++i) pool.emplace_back(run);
    for (auto& th : pool) th.join();

    // the answer is decided in lex task order: Colorable counts only when every
    // smaller task finished NotColorable, so widths agree on verdict and witness
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        switch (results[i]) {
            case TaskResult::NotColorable: continue;
            case TaskResult::Colorable: return outcome(Verdict::Colorable, std::move(certs[i]));
            default: return outcome(Verdict::BudgetExhausted, std::nullopt);
        }
    }
    return outcome(Verdict::NotColorable, std::nullopt);
}

std::string ScanRow::log_line() const {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "t=%d outcome=%s nodes=%llu seconds=%.3f", t,
                  verdict_name(verdict).c_str(), static_cast<unsigned long long>(nodes), seconds);
    return buf;
}

ComputeResult compute_m(int parts, const std::vector<TargetPattern>& targets, int t_max,
                        const SearchConfig& cfg) {
    ComputeResult res;
    int last_colorable = 0;
    for (int t = 1; t <= t_max; ++t) {
        auto start = Clock::now();
        SearchOutcome oc = decide_colorable({make_shape(parts, t), targets}, cfg);
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        res.rows.push_back({t, oc.verdict, oc.nodes, secs});
        if (oc.verdict == Verdict::NotColorable) {
            res.value = RamseyValue::finite(t);
            return res;
        }
        if (oc.verdict == Verdict::BudgetExhausted) {
            res.value = RamseyValue::unknown(last_colorable + 1);
            return res;
        }
        last_colorable = t;
    }
    res.value = RamseyValue::unknown(last_colorable + 1);
    return res;
}

}  // namespace mramsey
