#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mramsey/graph.hpp"

namespace mramsey {

struct SearchConfig {
    std::uint64_t node_budget = 100'000'000;
    double time_budget_seconds = 600.0;
    bool symmetry = true;    // lex-pruning against host automorphism generators
    int parallel_width = 1;  // worker threads; subtrees split on a prefix of edges
};

enum class Verdict { Colorable, NotColorable, BudgetExhausted };
std::string verdict_name(Verdict v);  // "colorable" / "not_colorable" / "budget"

struct SearchOutcome {
    Verdict verdict = Verdict::BudgetExhausted;
    std::optional<Certificate> certificate;  // set when Colorable
    std::uint64_t nodes = 0;                 // assignments attempted
    int best_depth = 0;                      // deepest prefix reached
};

// Exhaustive backtracking over edge colorings in canonical edge order with
// incremental pattern cuts. When it answers Colorable, the certificate is the
// lexicographically least valid coloring, with or without symmetry pruning,
// at any parallel width (given enough budget). Budget exhaustion is reported
// as such, never as a verdict.
SearchOutcome decide_colorable(const ColoringProblem& problem, const SearchConfig& cfg = {});

struct ScanRow {
    int t = 0;
    Verdict verdict = Verdict::BudgetExhausted;
    std::uint64_t nodes = 0;
    double seconds = 0;
    std::string log_line() const;  // "t=<k> outcome=<...> nodes=<n> seconds=<s>"
};

struct ComputeResult {
    RamseyValue value;
    std::vector<ScanRow> rows;
};

// Scan t = 1, 2, ... until a NotColorable host pins the value, the budget
// dies, or t_max is passed (then the value is unknown with lower bound).
ComputeResult compute_m(int parts, const std::vector<TargetPattern>& targets, int t_max,
                        const SearchConfig& cfg = {});

}  // namespace mramsey
