#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "mramsey/detect.hpp"
#include "mramsey/graph.hpp"
#include "mramsey/search.hpp"

namespace mramsey {

// Solver spoke gibberish: unparseable verdict layout, model missing or
// inconsistent with the exactly-one constraints. Crashes and timeouts are NOT
// protocol errors; those surface as BudgetExhausted.
class ProtocolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Runs an external DIMACS CNF solver: `command` is a shell template whose
// {cnf} placeholder is replaced by the file path. Output is parsed from
// "s SATISFIABLE" / "s UNSATISFIABLE" and "v " lines, ignoring exit codes.
struct SolverBridge {
    std::string command;
    double timeout_seconds = 0;  // 0: none; otherwise the run is wrapped in timeout(1)

    // MRAMSEY_SAT_SOLVER env override if set, else mramsey-sat next to the
    // current executable, else "mramsey-sat" from PATH.
    static SolverBridge default_bridge();
};

struct SolverRun {
    enum class Status { Sat, Unsat, NoVerdict };
    Status status = Status::NoVerdict;
    std::vector<bool> model;  // 1-based truth values, index 0 unused
};

SolverRun run_solver(const SolverBridge& bridge, const std::filesystem::path& cnf_file,
                     int num_vars);

struct CegarIteration {
    int iteration = 0;
    long long clauses = 0;                 // CNF size before this refinement
    std::vector<VerifyFailure> violations; // witnesses blocked this round
};

struct CegarConfig {
    long long eager_threshold = 200000;
    int max_iterations = 100000;
    double time_budget_seconds = 900.0;
    bool sweep = false;          // block every copy in the violating class, not just one
    long long sweep_cap = 200000;
    bool keep_files = false;
    std::filesystem::path workdir;  // empty: fresh directory under the system temp
    std::function<void(const CegarIteration&)> on_iteration;
};

// Counterexample-guided loop: eager base encoding, then per round either one
// blocking clause per violated color (default) or a sweep of the violating
// class. Sound and complete relative to the solver because blocking clauses
// only exclude colorings that genuinely contain a pattern copy.
SearchOutcome solve_cegar(const ColoringProblem& problem, const SolverBridge& bridge,
                          const CegarConfig& cfg = {});

}  // namespace mramsey
