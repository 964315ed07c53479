#include "mramsey/witness.hpp"

#include "mramsey/detect.hpp"

namespace mramsey {

namespace {

Certificate finish(ColoringProblem problem, EdgeColoring coloring, std::string provenance) {
    Certificate cert{std::move(problem), std::move(coloring), std::move(provenance)};
    if (!verify_certificate(cert).pass)
        throw std::logic_error("witness construction failed verification: " + cert.provenance);
    return cert;
}

std::string tag(const char* name, int j, int n) {
    return std::string("witness:") + name + " j=" + std::to_string(j) + " n=" + std::to_string(n);
}

}  // namespace

Certificate witness_null_star_rest(int j, int n) {
    if (j < 2 || n < 2)
        throw DomainError("null-star-rest requires j >= 2 and n >= 2 (got j=" +
                          std::to_string(j) + ", n=" + std::to_string(n) + ")");
    int t = 2 * n / j;
    if (t < 1)
        throw DomainError("null-star-rest requires 2n >= j (got j=" + std::to_string(j) +
                          ", n=" + std::to_string(n) + ")");
    PartitionShape shape = make_shape(j, t);
    EdgeTable host(shape);
    EdgeColoring col(host.edge_count(), 3);
    for (int e = 0; e < host.edge_count(); ++e) {
        auto [u, v] = host.endpoints(e);
        col.set_color(e, (u == 0 || v == 0) ? 1 : 2);  // color 0 stays empty
    }
    ColoringProblem p{shape,
                      {TargetPattern::star(2), TargetPattern::path(4), TargetPattern::stripe(n)}};
    return finish(std::move(p), std::move(col), tag("null-star-rest", j, n));
}

Certificate witness_bipartite_split3(int n) {
    if (n < 3)
        throw DomainError("bipartite-split3 requires n >= 3 (got n=" + std::to_string(n) + ")");
    PartitionShape shape = make_shape(3, n - 1);
    EdgeTable host(shape);
    EdgeColoring col(host.edge_count(), 2);
    for (int e = 0; e < host.edge_count(); ++e) {
        auto [u, v] = host.endpoints(e);
        bool touches_last = shape.part_of(u) == 2 || shape.part_of(v) == 2;
        col.set_color(e, touches_last ? 1 : 0);
    }
    ColoringProblem p{shape, {TargetPattern::stripe(n), TargetPattern::cycle(7)}};
    return finish(std::move(p), std::move(col), tag("bipartite-split3", 3, n));
}

Certificate witness_part_vs_rest(int j, int n) {
    if (j < 3 || n < j)
        throw DomainError("part-vs-rest requires j >= 3 and n >= j (got j=" + std::to_string(j) +
                          ", n=" + std::to_string(n) + ")");
    int t0 = (2 * n + 2 + j - 1) / j - 1;
    PartitionShape shape = make_shape(j, t0);
    EdgeTable host(shape);
    EdgeColoring col(host.edge_count(), 2);
    for (int e = 0; e < host.edge_count(); ++e) {
        auto [u, v] = host.endpoints(e);
        bool touches_first = shape.part_of(u) == 0 || shape.part_of(v) == 0;
        col.set_color(e, touches_first ? 1 : 0);
    }
    ColoringProblem p{shape, {TargetPattern::stripe(n), TargetPattern::cycle(7)}};
    return finish(std::move(p), std::move(col), tag("part-vs-rest", j, n));
}

}  // namespace mramsey
