#pragma once

#include <string>
#include <vector>

#include "mramsey/graph.hpp"

namespace mramsey {

// Propositional encoding of a coloring problem. Variable var(e, c) = e*r + c + 1
// (1-based, DIMACS-ready) says edge e has color c. The base encoding carries
// exactly-one-color per edge plus one blocking clause per pattern copy for the
// colors cheap enough to expand eagerly; the rest are marked lazy and left to
// counterexample refinement.
struct CnfInstance {
    int num_vars = 0;
    int colors = 0;
    long long edge_count = 0;
    std::vector<std::vector<int>> clauses;

    struct ColorStats {
        long long copies = 0;   // pattern copies in the full host
        long long clauses = 0;  // emitted eagerly (0 when lazy)
        bool lazy = false;
    };
    std::vector<ColorStats> stats;

    int var(int e, int c) const { return e * colors + c + 1; }

    std::string to_dimacs() const;
    std::string to_map(const EdgeTable& host) const;  // "e <u> <v> <c> <var>" lines
};

// Stars are always eager (per-vertex degree subsets). Paths and cycles are
// eager while the host holds at most `eager_threshold` copies. Stripes are
// always lazy: their copy counts explode first and matchings refine well.
CnfInstance encode_eager(const ColoringProblem& problem, long long eager_threshold = 200000);

}  // namespace mramsey
