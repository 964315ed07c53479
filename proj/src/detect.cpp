#include "mramsey/detect.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mramsey {

namespace {

// adjacency of the subgraph induced by s: (neighbor, edge id) lists
std::vector<std::vector<std::pair<int, int>>> sub_adj(const EdgeTable& host, const EdgeSet& s) {
    std::vector<std::vector<std::pair<int, int>>> adj(host.vertex_count());
    for (int e = 0; e < host.edge_count(); ++e)
        if (s.test(e)) {
            auto [u, v] = host.endpoints(e);
            adj[u].push_back({v, e});
            adj[v].push_back({u, e});
        }
    return adj;
}

// Maximum matching with blossom contraction (BFS augmenting forest).
struct Matcher {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, p, base, q;
    std::vector<char> used, bloss;

    explicit Matcher(int n)
        : n(n), adj(n), match(n, -1), p(n, -1), base(n), used(n, 0), bloss(n, 0) {}

    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    int lca(int a, int b) {
        std::vector<char> mark(n, 0);
        while (true) {
            a = base[a];
            mark[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        while (true) {
            b = base[b];
            if (mark[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            bloss[base[v]] = 1;
            bloss[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        q.clear();
        q.push_back(root);
        used[root] = 1;
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(bloss.begin(), bloss.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (bloss[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push_back(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = p[v], ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }

    // grow until no augmenting path remains, or size hits stop_at (stop_at < 0: no cap)
    int run(int stop_at) {
        int size = 0;
        for (int v = 0; v < n; ++v) {
            if (stop_at >= 0 && size >= stop_at) break;
            if (match[v] != -1) continue;
            int u = find_path(v);
            if (u != -1) {
                augment(u);
                ++size;
            }
        }
        return size;
    }
};

Matcher build_matcher(const EdgeTable& host, const EdgeSet& s) {
    Matcher m(host.vertex_count());
    for (int e = 0; e < host.edge_count(); ++e)
        if (s.test(e)) {
            auto [u, v] = host.endpoints(e);
            m.add_edge(u, v);
        }
    return m;
}

std::vector<int> matched_edges(const EdgeTable& host, const Matcher& m) {
    std::vector<int> out;
    for (int v = 0; v < m.n; ++v)
        if (m.match[v] > v) out.push_back(host.id_of(v, m.match[v]));
    return out;
}

// BFS distances from src in the s-subgraph, restricted to vertices >= floor_v
std::vector<int> bfs_dist(const std::vector<std::vector<std::pair<int, int>>>& adj, int src,
                          int floor_v) {
    std::vector<int> dist(adj.size(), -1);
    std::vector<int> q{src};
    dist[src] = 0;
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
        int v = q[qi];
        for (auto [w, e] : adj[v])
            if (w >= floor_v && dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

}  // namespace

DetectorResult contains_star(const EdgeTable& host, const EdgeSet& s, int m) {
    for (int v = 0; v < host.vertex_count(); ++v) {
        std::vector<int> hit;
        for (auto [e, w] : host.incident()[v]) {
            (void)w;
            if (s.test(e)) {
                hit.push_back(e);
                if (static_cast<int>(hit.size()) == m) return {true, std::move(hit)};
            }
        }
    }
    return {};
}

DetectorResult contains_path(const EdgeTable& host, const EdgeSet& s, int p) {
    if (p == 1) return {host.vertex_count() >= 1, {}};
    auto adj = sub_adj(host, s);
    int n = host.vertex_count();
    std::vector<char> vis(n, 0);
    std::vector<int> path;
    std::function<bool(int, int)> grow = [&](int cur, int depth) {
        if (depth == p) return true;
        for (auto [w, e] : adj[cur])
            if (!vis[w]) {
                vis[w] = 1;
                path.push_back(e);
                if (grow(w, depth + 1)) return true;
                vis[w] = 0;
                path.pop_back();
            }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        vis[v] = 1;
        if (grow(v, 1)) return {true, path};
        vis[v] = 0;
    }
    return {};
}

DetectorResult contains_cycle(const EdgeTable& host, const EdgeSet& s, int k) {
    int n = host.vertex_count();
    if (n < k) return {};
    auto adj = sub_adj(host, s);
    std::vector<char> vis(n, 0);
    std::vector<int> path;
    // anchor = minimum vertex on the cycle; all others strictly greater
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(adj[a].size()) < 2) continue;
        auto dist = bfs_dist(adj, a, a);
        std::function<bool(int, int)> grow = [&](int cur, int depth) {
            if (depth == k) {
                for (auto [w, e] : adj[cur])
                    if (w == a) {
                        path.push_back(e);
                        return true;
                    }
                return false;
            }
            for (auto [w, e] : adj[cur]) {
                if (w <= a || vis[w]) continue;
                if (dist[w] < 0 || dist[w] > k - depth) continue;
                vis[w] = 1;
                path.push_back(e);
                if (grow(w, depth + 1)) return true;
                vis[w] = 0;
                path.pop_back();
            }
            return false;
        };
        vis[a] = 1;
        if (grow(a, 1)) return {true, path};
        vis[a] = 0;
    }
    return {};
}

DetectorResult contains_stripe(const EdgeTable& host, const EdgeSet& s, int n) {
    Matcher m = build_matcher(host, s);
    int size = m.run(n);
    if (size < n) return {};
    auto edges = matched_edges(host, m);
    edges.resize(n);
    return {true, std::move(edges)};
}

DetectorResult contains_pattern(const EdgeTable& host, const EdgeSet& s, TargetPattern t) {
    switch (t.kind) {
        case PatternKind::Star: return contains_star(host, s, t.param);
        case PatternKind::Path: return contains_path(host, s, t.param);
        case PatternKind::Stripe: return contains_stripe(host, s, t.param);
        case PatternKind::Cycle: return contains_cycle(host, s, t.param);
    }
    return {};
}

MatchingState matching_number(const EdgeTable& host, const EdgeSet& s) {
    Matcher m = build_matcher(host, s);
    m.run(-1);
    return {matched_edges(host, m)};
}

bool extends_to_pattern(const EdgeTable& host, const EdgeSet& s, int new_edge, TargetPattern t) {
    auto [u, v] = host.endpoints(new_edge);
    switch (t.kind) {
        case PatternKind::Star: {
            int m = t.param;
            for (int x : {u, v}) {
                int deg = 1;
                if (deg >= m) return true;
                for (auto [e, w] : host.incident()[x]) {
                    (void)w;
                    if (e != new_edge && s.test(e) && ++deg >= m) break;
                }
                if (deg >= m) return true;
            }
            return false;
        }
        case PatternKind::Path: {
            int p = t.param;
            if (p <= 2) return true;  // the new edge alone is a P_2 (or implies P_1)
            // a new P_p must use the new edge: simple paths A-u-v-B with |A|+|B| = p-2
            int n = host.vertex_count();
            std::vector<char> vis(n, 0);
            vis[u] = vis[v] = 1;
            int need_b = 0;
            std::function<bool(int, int)> grow_b = [&](int cur, int rem) {
                if (rem == 0) return true;
                for (auto [e, w] : host.incident()[cur])
                    if (s.test(e) && !vis[w]) {
                        vis[w] = 1;
                        if (grow_b(w, rem - 1)) return true;
                        vis[w] = 0;
                    }
                return false;
            };
            std::function<bool(int, int)> grow_a = [&](int cur, int rem) {
                if (rem == 0) return grow_b(v, need_b);
                for (auto [e, w] : host.incident()[cur])
                    if (s.test(e) && !vis[w]) {
                        vis[w] = 1;
                        if (grow_a(w, rem - 1)) return true;
                        vis[w] = 0;
                    }
                return false;
            };
            for (int a = 0; a <= p - 2; ++a) {
                need_b = p - 2 - a;
                if (grow_a(u, a)) return true;
            }
            return false;
        }
        case PatternKind::Cycle: {
            int k = t.param;
            // a new C_k must use the new edge: simple u-v path of k-1 edges in s
            auto adj = sub_adj(host, s);
            auto dist = bfs_dist(adj, u, 0);
            if (dist[v] < 0 || dist[v] > k - 1) return false;
            int n = host.vertex_count();
            std::vector<char> vis(n, 0);
            vis[v] = 1;
            // walk from v toward u; rem edges left, cannot revisit
            std::function<bool(int, int)> grow = [&](int cur, int rem) {
                if (rem == 0) return cur == u;
                if (cur == u) return false;
                for (auto [w, e] : adj[cur]) {
                    (void)e;
                    if (vis[w] || dist[w] < 0 || dist[w] > rem - 1) continue;
                    vis[w] = 1;
                    if (grow(w, rem - 1)) return true;
                    vis[w] = 0;
                }
                return false;
            };
            return grow(v, k - 1);
        }
        case PatternKind::Stripe: {
            Matcher m = build_matcher(host, s);
            auto [a, b] = host.endpoints(new_edge);
            m.add_edge(a, b);
            return m.run(t.param) >= t.param;
        }
    }
    return false;
}

namespace {

void for_each_star(const EdgeTable& host, const EdgeSet& s, int m, const CopyFn& fn, bool& stop) {
    if (m == 1) {
        std::vector<int> copy(1);
        for (int e = 0; e < host.edge_count() && !stop; ++e)
            if (s.test(e)) {
                copy[0] = e;
                if (!fn(copy)) stop = true;
            }
        return;
    }
    for (int v = 0; v < host.vertex_count() && !stop; ++v) {
        std::vector<int> inc;
        for (auto [e, w] : host.incident()[v]) {
            (void)w;
            if (s.test(e)) inc.push_back(e);
        }
        int d = static_cast<int>(inc.size());
        if (d < m) continue;
        std::vector<int> pick;
        std::function<void(int)> combine = [&](int from) {
            if (stop) return;
            if (static_cast<int>(pick.size()) == m) {
                if (!fn(pick)) stop = true;
                return;
            }
            for (int i = from; i < d; ++i) {
                pick.push_back(inc[i]);
                combine(i + 1);
                pick.pop_back();
                if (stop) return;
            }
        };
        combine(0);
    }
}

void for_each_path(const EdgeTable& host, const EdgeSet& s, int p, const CopyFn& fn, bool& stop) {
    if (p == 1) {
        if (host.vertex_count() >= 1) {
            if (!fn({})) stop = true;
        }
        return;
    }
    auto adj = sub_adj(host, s);
    int n = host.vertex_count();
    std::vector<char> vis(n, 0);
    std::vector<int> edges;
    int first = 0;
    std::function<void(int, int)> grow = [&](int cur, int depth) {
        if (stop) return;
        if (depth == p) {
            if (first < cur) {  // one orientation per copy
                if (!fn(edges)) stop = true;
            }
            return;
        }
        for (auto [w, e] : adj[cur]) {
            if (vis[w]) continue;
            vis[w] = 1;
            edges.push_back(e);
            grow(w, depth + 1);
            vis[w] = 0;
            edges.pop_back();
            if (stop) return;
        }
    };
    for (first = 0; first < n && !stop; ++first) {
        vis[first] = 1;
        grow(first, 1);
        vis[first] = 0;
    }
}

void for_each_cycle(const EdgeTable& host, const EdgeSet& s, int k, const CopyFn& fn, bool& stop) {
    int n = host.vertex_count();
    if (n < k) return;
    auto adj = sub_adj(host, s);
    std::vector<char> vis(n, 0);
    std::vector<int> edges;
    for (int a = 0; a < n && !stop; ++a) {
        if (static_cast<int>(adj[a].size()) < 2) continue;
        auto dist = bfs_dist(adj, a, a);
        int second = -1;
        std::function<void(int, int)> grow = [&](int cur, int depth) {
            if (stop) return;
            if (depth == k) {
                if (second < cur) {  // one orientation per copy
                    for (auto [w, e] : adj[cur])
                        if (w == a) {
                            edges.push_back(e);
                            if (!fn(edges)) stop = true;
                            edges.pop_back();
                            break;
                        }
                }
                return;
            }
            for (auto [w, e] : adj[cur]) {
                if (w <= a || vis[w]) continue;
                if (dist[w] < 0 || dist[w] > k - depth) continue;
                if (depth == 1) second = w;
                vis[w] = 1;
                edges.push_back(e);
                grow(w, depth + 1);
                vis[w] = 0;
                edges.pop_back();
                if (stop) return;
            }
        };
        vis[a] = 1;
        grow(a, 1);
        vis[a] = 0;
    }
}

void for_each_matching(const EdgeTable& host, const EdgeSet& s, int m, const CopyFn& fn,
                       bool& stop) {
    auto ids = s.ids();
    int total = static_cast<int>(ids.size());
    if (total < m) return;
    std::vector<char> busy(host.vertex_count(), 0);
    std::vector<int> pick;
    std::function<void(int)> grow = [&](int from) {
        if (stop) return;
        if (static_cast<int>(pick.size()) == m) {
            if (!fn(pick)) stop = true;
            return;
        }
        int need = m - static_cast<int>(pick.size());
        for (int i = from; i + need <= total; ++i) {
            auto [u, v] = host.endpoints(ids[i]);
            if (busy[u] || busy[v]) continue;
            busy[u] = busy[v] = 1;
            pick.push_back(ids[i]);
            grow(i + 1);
            pick.pop_back();
            busy[u] = busy[v] = 0;
            if (stop) return;
        }
    };
    grow(0);
}

}  // namespace

void for_each_copy(const EdgeTable& host, const EdgeSet& s, TargetPattern t, const CopyFn& fn) {
    bool stop = false;
    switch (t.kind) {
        case PatternKind::Star: for_each_star(host, s, t.param, fn, stop); break;
        case PatternKind::Path: for_each_path(host, s, t.param, fn, stop); break;
        case PatternKind::Cycle: for_each_cycle(host, s, t.param, fn, stop); break;
        case PatternKind::Stripe: for_each_matching(host, s, t.param, fn, stop); break;
    }
}

long long count_copies(const EdgeTable& host, const EdgeSet& s, TargetPattern t) {
    long long n = 0;
    for_each_copy(host, s, t, [&](const std::vector<int>&) {
        ++n;
        return true;
    });
    return n;
}

std::string Observation1Report::to_text() const {
    std::ostringstream out;
    for (const auto& h : hosts)
        out << "host=" << h.name << " subsets=" << h.subsets << " star_branch=" << h.star_branch
            << " path_branch=" << h.path_branch << " both=" << h.both
            << " failures=" << h.failures << (h.failures == 0 ? " PASS" : " FAIL") << "\n";
    out << "observation1 " << (pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

Observation1Report check_observation1() {
    Observation1Report rep;
    auto run_host = [&](const std::string& name, const EdgeTable& host) {
        Observation1Report::HostRow row;
        row.name = name;
        int m = host.edge_count();
        for (int mask = 0; mask < (1 << m); ++mask) {
            EdgeSet h(m);
            for (int e = 0; e < m; ++e)
                if (mask & (1 << e)) h.set(e);
            bool star = contains_star(host, h, 2).found;
            bool path = contains_path(host, complement_within(host, h), 4).found;
            ++row.subsets;
            if (star) ++row.star_branch;
            if (path) ++row.path_branch;
            if (star && path) ++row.both;
            if (!star && !path) ++row.failures;
        }
        rep.hosts.push_back(row);
    };
    run_host("K_{2,3}", EdgeTable(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
    run_host("K_4-e", EdgeTable(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    rep.pass = true;
    for (const auto& h : rep.hosts)
        if (h.failures) rep.pass = false;
    return rep;
}

VerifyReport verify_certificate(const Certificate& cert) {
    const auto& p = cert.problem;
    EdgeTable host(p.shape);
    VerifyReport rep;
    rep.pass = true;
    for (int c = 0; c < p.colors(); ++c) {
        auto r = contains_pattern(host, cert.coloring.class_edges(c), p.targets[c]);
        if (r.found) {
            rep.pass = false;
            rep.failures.push_back({c, p.targets[c], std::move(r.witness)});
        }
    }
    return rep;
}

std::string VerifyReport::to_text(const Certificate& cert) const {
    EdgeTable host(cert.problem.shape);
    std::ostringstream out;
    std::size_t fi = 0;
    for (int c = 0; c < cert.problem.colors(); ++c) {
        out << "color=" << c << " target=" << cert.problem.targets[c].to_string();
        if (fi < failures.size() && failures[fi].color == c) {
            out << " status=FOUND witness=(";
            const auto& w = failures[fi].witness;
            for (std::size_t i = 0; i < w.size(); ++i) {
                auto [u, v] = host.endpoints(w[i]);
                out << (i ? "," : "") << u << "-" << v;
            }
            out << ")";
            ++fi;
        } else {
            out << " status=clean";
        }
        out << "\n";
    }
    out << "verify " << (pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace mramsey
