#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mramsey/graph.hpp"

namespace mramsey {

struct DetectorResult {
    bool found = false;
    std::vector<int> witness;  // edge ids forming one copy when found
};

// Subgraph detectors over an edge subset of a host. Exact, return a witness.
DetectorResult contains_star(const EdgeTable& host, const EdgeSet& s, int m);
DetectorResult contains_path(const EdgeTable& host, const EdgeSet& s, int p);
DetectorResult contains_cycle(const EdgeTable& host, const EdgeSet& s, int k);
DetectorResult contains_stripe(const EdgeTable& host, const EdgeSet& s, int n);
DetectorResult contains_pattern(const EdgeTable& host, const EdgeSet& s, TargetPattern t);

struct MatchingState {
    std::vector<int> edges;  // one maximum matching
    int size() const { return static_cast<int>(edges.size()); }
};

// Maximum matching in the subgraph induced by s (general graphs, blossom contraction).
MatchingState matching_number(const EdgeTable& host, const EdgeSet& s);

// Incremental form: s is pattern-free, does s + new_edge contain the pattern?
// Only valid under that precondition; the search maintains it along every branch.
bool extends_to_pattern(const EdgeTable& host, const EdgeSet& s, int new_edge, TargetPattern t);

// Enumerate every copy of the pattern inside s, one callback per copy (edge ids).
// Return false from the callback to stop early. Copies are edge-set-distinct.
using CopyFn = std::function<bool(const std::vector<int>&)>;
void for_each_copy(const EdgeTable& host, const EdgeSet& s, TargetPattern t, const CopyFn& fn);
long long count_copies(const EdgeTable& host, const EdgeSet& s, TargetPattern t);

// Exhaustive check that every subgraph H of K_{2,3} and of K_4 - e satisfies:
// H contains K_{1,2}, or its complement within the host contains P_4.
struct Observation1Report {
    struct HostRow {
        std::string name;
        int subsets = 0, star_branch = 0, path_branch = 0, both = 0, failures = 0;
    };
    std::vector<HostRow> hosts;
    bool pass = false;
    std::string to_text() const;
};
Observation1Report check_observation1();

// Independent certificate verification: run the detector for each color class.
struct VerifyFailure {
    int color = 0;
    TargetPattern target;
    std::vector<int> witness;
};
struct VerifyReport {
    bool pass = false;
    std::vector<VerifyFailure> failures;
    std::string to_text(const Certificate& cert) const;
};
VerifyReport verify_certificate(const Certificate& cert);

}  // namespace mramsey
