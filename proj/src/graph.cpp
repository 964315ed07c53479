#include "mramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace mramsey {

PartitionShape make_shape(int parts, int class_size) {
    if (parts < 1)
        throw DomainError("shape requires parts >= 1 (got " + std::to_string(parts) + ")");
    if (class_size < 1)
        throw DomainError("shape requires class_size >= 1 (got " + std::to_string(class_size) + ")");
    return {parts, class_size};
}

EdgeTable::EdgeTable(PartitionShape shape) : vertex_count_(shape.vertex_count()), shape_(shape) {
    pairs_.reserve(static_cast<std::size_t>(shape.edge_count()));
    for (int u = 0; u < vertex_count_; ++u)
        for (int v = u + 1; v < vertex_count_; ++v)
            if (shape.part_of(u) != shape.part_of(v)) pairs_.push_back({u, v});
    index_pairs();
}

EdgeTable::EdgeTable(int vertex_count, std::vector<VertexPair> pairs) : vertex_count_(vertex_count) {
    for (auto& p : pairs) {
        if (p.u > p.v) std::swap(p.u, p.v);
        if (p.u == p.v || p.u < 0 || p.v >= vertex_count)
            throw DomainError("bad edge (" + std::to_string(p.u) + "," + std::to_string(p.v) + ")");
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw DomainError("duplicate edge in pair list");
    pairs_ = std::move(pairs);
    index_pairs();
}

void EdgeTable::index_pairs() {
    incident_.assign(vertex_count_, {});
    for (int e = 0; e < edge_count(); ++e) {
        auto [u, v] = pairs_[e];
        incident_[u].push_back({e, v});
        incident_[v].push_back({e, u});
    }
    for (int u = 0; u < vertex_count_; ++u)
        std::sort(incident_[u].begin(), incident_[u].end(),
                  [](auto a, auto b) { return a.second < b.second; });
}

bool EdgeTable::has_pair(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= vertex_count_ || u == v) return false;
    const auto& inc = incident_[u];
    auto it = std::lower_bound(inc.begin(), inc.end(), v,
                               [](auto a, int b) { return a.second < b; });
    return it != inc.end() && it->second == v;
}

int EdgeTable::id_of(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto& inc = incident_.at(u);
    auto it = std::lower_bound(inc.begin(), inc.end(), v,
                               [](auto a, int b) { return a.second < b; });
    if (it == inc.end() || it->second != v)
        throw std::out_of_range("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return it->first;
}

EdgeSet EdgeSet::full(int universe) {
    EdgeSet s(universe);
    for (int e = 0; e < universe; ++e) s.set(e);
    return s;
}

int EdgeSet::count() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

std::vector<int> EdgeSet::ids() const {
    std::vector<int> out;
    for (int e = 0; e < universe_; ++e)
        if (test(e)) out.push_back(e);
    return out;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
}

EdgeSet EdgeSet::complement() const {
    EdgeSet r(universe_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
    int tail = universe_ & 63;
    if (tail && !r.bits_.empty()) r.bits_.back() &= (std::uint64_t{1} << tail) - 1;
    return r;
}

EdgeSet complement_within(const EdgeTable& host, const EdgeSet& s) {
    if (s.universe_size() != host.edge_count())
        throw DomainError("edge set universe does not match host");
    return s.complement();
}

static void check_param(const char* name, int v, int lo) {
    if (v < lo)
        throw DomainError(std::string(name) + " requires param >= " + std::to_string(lo) +
                          " (got " + std::to_string(v) + ")");
}

TargetPattern TargetPattern::star(int m) {
    check_param("star", m, 1);
    return {PatternKind::Star, m};
}
TargetPattern TargetPattern::path(int p) {
    check_param("path", p, 1);
    return {PatternKind::Path, p};
}
TargetPattern TargetPattern::stripe(int n) {
    check_param("stripe", n, 1);
    return {PatternKind::Stripe, n};
}
TargetPattern TargetPattern::cycle(int k) {
    check_param("cycle", k, 3);
    return {PatternKind::Cycle, k};
}

std::string TargetPattern::to_string() const {
    switch (kind) {
        case PatternKind::Star: return "K1," + std::to_string(param);
        case PatternKind::Path: return "P" + std::to_string(param);
        case PatternKind::Stripe: return std::to_string(param) + "K2";
        case PatternKind::Cycle: return "C" + std::to_string(param);
    }
    return "?";
}

static bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

TargetPattern TargetPattern::parse(const std::string& token) {
    int v = 0;
    std::string_view t(token);
    auto bad = [&]() -> DomainError {
        return DomainError("unrecognized target token \"" + token + "\"");
    };
    if (t.starts_with("K1,")) {
        if (!parse_int(t.substr(3), v)) throw bad();
        return star(v);
    }
    if (t.starts_with("P")) {
        if (!parse_int(t.substr(1), v)) throw bad();
        return path(v);
    }
    if (t.starts_with("C")) {
        if (!parse_int(t.substr(1), v)) throw bad();
        return cycle(v);
    }
    auto k2 = t.find("K2");
    if (k2 != std::string_view::npos && k2 + 2 == t.size()) {
        if (!parse_int(t.substr(0, k2), v)) throw bad();
        return stripe(v);
    }
    throw bad();
}

std::vector<TargetPattern> parse_target_list(const std::string& text) {
    std::vector<TargetPattern> out;
    std::size_t pos = 0;
    while (true) {
        auto semi = text.find(';', pos);
        std::string tok = text.substr(pos, semi == std::string::npos ? semi : semi - pos);
        out.push_back(TargetPattern::parse(tok));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

EdgeSet EdgeColoring::class_edges(int c) const {
    EdgeSet s(edge_count());
    for (int e = 0; e < edge_count(); ++e)
        if (color_[e] == c) s.set(e);
    return s;
}

std::string RamseyValue::to_string() const {
    switch (kind) {
        case Kind::Finite: return "Finite " + std::to_string(t);
        case Kind::Infinite: return "Infinite";
        case Kind::Unknown:
            return lower_bound ? "Unknown lower_bound=" + std::to_string(*lower_bound)
                               : "Unknown";
    }
    return "?";
}

}  // namespace mramsey
