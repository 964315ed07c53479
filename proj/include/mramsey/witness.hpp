#pragma once

#include "mramsey/graph.hpp"

namespace mramsey {

// Constructive lower-bound colorings. Each returns a certificate that already
// re-verified against the detectors; an invalid construction is a logic error.

// K_{j x floor(2n/j)} for (K_{1,2}, P_4, nK_2): red empty, blue the star of
// vertex 0, green everything else. Needs j >= 2, n >= 2, 2n >= j.
Certificate witness_null_star_rest(int j, int n);

// K_{3 x (n-1)} for (nK_2, C_7): red between parts 0 and 1, blue everything
// incident to part 2. Needs n >= 3.
Certificate witness_bipartite_split3(int n);

// K_{j x (ceil((2n+2)/j) - 1)} for (nK_2, C_7): red among parts 1..j-1, blue
// everything incident to part 0. Needs j >= 3, n >= j.
Certificate witness_part_vs_rest(int j, int n);

}  // namespace mramsey
