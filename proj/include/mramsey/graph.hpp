#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mramsey {

// Parameter outside a formula's or constructor's stated domain.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Complete multipartite host K_{j x t}: `parts` classes of `class_size`
// vertices each. Vertex ids are part-major: v = part * class_size + slot.
struct PartitionShape {
    int parts = 0;
    int class_size = 0;

    int vertex_count() const { return parts * class_size; }
    long long edge_count() const {
        long long n = vertex_count(), t = class_size;
        return n * (n - 1) / 2 - parts * (t * (t - 1) / 2);
    }
    int part_of(int v) const { return v / class_size; }

    friend bool operator==(const PartitionShape&, const PartitionShape&) = default;
};

PartitionShape make_shape(int parts, int class_size);  // throws DomainError

struct VertexPair {
    int u = 0, v = 0;  // u < v
    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Bijection between edge ids and vertex pairs of a host graph.
// Shape-built tables enumerate cross-part pairs in lexicographic (u,v) order;
// that order is the canonical one used by colorings, certificates and search.
// Ad-hoc tables (explicit pair list) serve detector tests and small fixed hosts.
class EdgeTable {
public:
    explicit EdgeTable(PartitionShape shape);
    EdgeTable(int vertex_count, std::vector<VertexPair> pairs);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(pairs_.size()); }
    VertexPair endpoints(int eid) const { return pairs_[eid]; }
    bool has_pair(int u, int v) const;
    int id_of(int u, int v) const;  // throws std::out_of_range if absent

    const std::optional<PartitionShape>& shape() const { return shape_; }
    const std::vector<VertexPair>& pairs() const { return pairs_; }
    // incident()[v] lists (edge id, other endpoint)
    const std::vector<std::vector<std::pair<int, int>>>& incident() const { return incident_; }

private:
    void index_pairs();

    int vertex_count_ = 0;
    std::optional<PartitionShape> shape_;
    std::vector<VertexPair> pairs_;
    std::vector<std::vector<std::pair<int, int>>> incident_;  // sorted by other endpoint
};

// Subset of a host's edges as a fixed-universe bitset.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}
    static EdgeSet full(int universe);

    int universe_size() const { return universe_; }
    bool test(int e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }
    void set(int e) { bits_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void reset(int e) { bits_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
    int count() const;
    std::vector<int> ids() const;

    EdgeSet& operator|=(const EdgeSet& o);
    EdgeSet& operator&=(const EdgeSet& o);
    EdgeSet complement() const;  // within the universe

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> bits_;
};

EdgeSet complement_within(const EdgeTable& host, const EdgeSet& s);

enum class PatternKind { Star, Path, Stripe, Cycle };

// Star(m) = K_{1,m}; Path(p) = P_p on p vertices; Stripe(n) = nK_2; Cycle(k) = C_k.
// Containment is always subgraph containment, never induced.
struct TargetPattern {
    PatternKind kind = PatternKind::Star;
    int param = 1;

    static TargetPattern star(int m);
    static TargetPattern path(int p);
    static TargetPattern stripe(int n);
    static TargetPattern cycle(int k);
    static TargetPattern parse(const std::string& token);  // "K1,2" "P4" "3K2" "C7"

    std::string to_string() const;
    friend bool operator==(const TargetPattern&, const TargetPattern&) = default;
};

// "K1,2;P4;3K2" -> list of patterns; throws DomainError naming the bad token.
std::vector<TargetPattern> parse_target_list(const std::string& text);

struct ColoringProblem {
    PartitionShape shape;
    std::vector<TargetPattern> targets;
    int colors() const { return static_cast<int>(targets.size()); }
};

// Total assignment of one color per edge, edges indexed in canonical order.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int edge_count, int num_colors)
        : num_colors_(num_colors), color_(edge_count, 0) {}

    int edge_count() const { return static_cast<int>(color_.size()); }
    int num_colors() const { return num_colors_; }
    int color_of(int e) const { return color_[e]; }
    void set_color(int e, int c) { color_[e] = static_cast<std::uint8_t>(c); }
    EdgeSet class_edges(int c) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int num_colors_ = 0;
    std::vector<std::uint8_t> color_;
};

struct Certificate {
    ColoringProblem problem;
    EdgeColoring coloring;
    std::string provenance;
};

// Value of a size multipartite Ramsey number: a finite t, provably infinite,
// or unknown with an optional constructive lower bound.
struct RamseyValue {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind = Kind::Unknown;
    int t = 0;
    std::optional<int> lower_bound;

    static RamseyValue finite(int t) { return {Kind::Finite, t, std::nullopt}; }
    static RamseyValue infinite() { return {Kind::Infinite, 0, std::nullopt}; }
    static RamseyValue unknown(std::optional<int> lb = std::nullopt) {
        return {Kind::Unknown, 0, lb};
    }

    std::string to_string() const;
    friend bool operator==(const RamseyValue&, const RamseyValue&) = default;
};

}  // namespace mramsey
