#include "mramsey/cnf.hpp"

#include <sstream>

#include "mramsey/detect.hpp"

namespace mramsey {

CnfInstance encode_eager(const ColoringProblem& problem, long long eager_threshold) {
    EdgeTable host(problem.shape);
    int E = host.edge_count(), r = problem.colors();
    CnfInstance cnf;
    cnf.colors = r;
    cnf.edge_count = E;
    cnf.num_vars = E * r;
    cnf.stats.resize(r);

    // exactly one color per edge: one at-least-one clause, pairwise at-most-one
    for (int e = 0; e < E; ++e) {
        std::vector<int> alo;
        for (int c = 0; c < r; ++c) alo.push_back(cnf.var(e, c));
        cnf.clauses.push_back(std::move(alo));
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                cnf.clauses.push_back({-cnf.var(e, a), -cnf.var(e, b)});
    }

    EdgeSet all = EdgeSet::full(E);
    for (int c = 0; c < r; ++c) {
        const TargetPattern& t = problem.targets[c];
        auto& st = cnf.stats[c];
        st.copies = count_copies(host, all, t);
        bool eager;
        switch (t.kind) {
            case PatternKind::Star: eager = true; break;
            case PatternKind::Stripe: eager = false; break;
            default: eager = st.copies <= eager_threshold; break;
        }
        if (!eager) {
            st.lazy = true;
            continue;
        }
        for_each_copy(host, all, t, [&](const std::vector<int>& copy) {
            std::vector<int> clause;
            clause.reserve(copy.size());
            for (int e : copy) clause.push_back(-cnf.var(e, c));
            cnf.clauses.push_back(std::move(clause));
            ++st.clauses;
            return true;
        });
    }
    return cnf;
}

std::string CnfInstance::to_dimacs() const {
    std::ostringstream out;
    out << "p cnf " << num_vars << " " << clauses.size() << "\n";
    for (const auto& cl : clauses) {
        for (int lit : cl) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

std::string CnfInstance::to_map(const EdgeTable& host) const {
    std::ostringstream out;
    for (int e = 0; e < static_cast<int>(edge_count); ++e) {
        auto [u, v] = host.endpoints(e);
        for (int c = 0; c < colors; ++c)
            out << "e " << u << " " << v << " " << c << " " << var(e, c) << "\n";
    }
    return out.str();
}

}  // namespace mramsey
