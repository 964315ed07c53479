// mramsey-sat: small CDCL solver for DIMACS CNF.
// Watched literals, activity-ordered decisions with phase saving, Luby
// restarts, first-UIP clause learning. Prints the usual "s ..."/"v ..." lines.
//
//   mramsey-sat FILE.cnf     (or reads stdin with no argument)

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kUndef = -1;

struct Solver {
    int nvars = 0;
    bool ok = true;
    std::vector<std::vector<int>> clauses;   // lits: var*2 (pos), var*2+1 (neg)
    std::vector<std::vector<int>> watches;   // per lit: clause indices
    std::vector<std::int8_t> assigns;        // per var: 1 true, 0 false, -1 unset
    std::vector<std::int8_t> polarity;       // saved phase, 1 = try true first
    std::vector<int> trail, trail_lim;
    std::vector<int> reason, level;          // per var
    std::size_t qhead = 0;

    std::vector<double> activity;
    double var_inc = 1.0;
    std::vector<int> heap, heap_pos;         // max-heap on activity
    std::vector<std::int8_t> seen;

    void init(int n) {
        nvars = n;
        watches.assign(2 * n, {});
        assigns.assign(n, kUndef);
        polarity.assign(n, 0);
        reason.assign(n, kUndef);
        level.assign(n, 0);
        activity.assign(n, 0.0);
        heap_pos.assign(n, kUndef);
        seen.assign(n, 0);
        for (int v = 0; v < n; ++v) heap_push(v);
    }

    // ----- activity heap -----
    bool heap_less(int a, int b) const { return activity[a] < activity[b]; }
    void heap_up(int i) {
        int v = heap[i];
        while (i > 0) {
            int pi = (i - 1) / 2;
            if (!heap_less(heap[pi], v)) break;
            heap[i] = heap[pi];
            heap_pos[heap[i]] = i;
            i = pi;
        }
        heap[i] = v;
        heap_pos[v] = i;
    }
    void heap_down(int i) {
        int v = heap[i];
        int n = static_cast<int>(heap.size());
        while (true) {
            int l = 2 * i + 1, r = l + 1, big = -1;
            int bv = v;
            if (l < n && heap_less(bv, heap[l])) big = l, bv = heap[l];
            if (r < n && heap_less(bv, heap[r])) big = r, bv = heap[r];
            if (big < 0) break;
            heap[i] = heap[big];
            heap_pos[heap[i]] = i;
            i = big;
        }
        heap[i] = v;
        heap_pos[v] = i;
    }
    void heap_push(int v) {
        if (heap_pos[v] != kUndef) return;
        heap.push_back(v);
        heap_pos[v] = static_cast<int>(heap.size()) - 1;
        heap_up(heap_pos[v]);
    }
    int heap_pop() {
        int v = heap[0];
        heap_pos[v] = kUndef;
        if (heap.size() > 1) {
            heap[0] = heap.back();
            heap_pos[heap[0]] = 0;
            heap.pop_back();
            heap_down(0);
        } else {
            heap.pop_back();
        }
        return v;
    }
    void bump(int v) {
        activity[v] += var_inc;
        if (activity[v] > 1e100) {
            for (auto& a : activity) a *= 1e-100;
            var_inc *= 1e-100;
        }
        if (heap_pos[v] != kUndef) heap_up(heap_pos[v]);
    }

    // ----- assignment -----
    std::int8_t value(int lit) const {
        std::int8_t a = assigns[lit >> 1];
        return a == kUndef ? kUndef : static_cast<std::int8_t>(a ^ (lit & 1));
    }
    int decision_level() const { return static_cast<int>(trail_lim.size()); }

    void enqueue(int lit, int from) {
        int v = lit >> 1;
        assigns[v] = static_cast<std::int8_t>(1 ^ (lit & 1));
        reason[v] = from;
        level[v] = decision_level();
        trail.push_back(lit);
    }

    void cancel_until(int lvl) {
        if (decision_level() <= lvl) return;
        for (int i = static_cast<int>(trail.size()) - 1; i >= trail_lim[lvl]; --i) {
            int v = trail[i] >> 1;
            polarity[v] = assigns[v];
            assigns[v] = kUndef;
            reason[v] = kUndef;
            heap_push(v);
        }
        trail.resize(trail_lim[lvl]);
        trail_lim.resize(lvl);
        qhead = trail.size();
    }

    // ----- clauses -----
    bool add_clause(std::vector<int> lits) {
        if (!ok) return false;
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if ((lits[i] ^ 1) == lits[i + 1]) return true;  // tautology
        std::vector<int> kept;
        for (int l : lits) {
            std::int8_t v = value(l);
            if (v == 1) return true;  // satisfied at level 0
            if (v == kUndef) kept.push_back(l);
        }
        if (kept.empty()) return ok = false;
        if (kept.size() == 1) {
            enqueue(kept[0], kUndef);
            return ok = (propagate() == kUndef);
        }
        attach(std::move(kept));
        return true;
    }

    void attach(std::vector<int> lits) {
        int ci = static_cast<int>(clauses.size());
        watches[lits[0]].push_back(ci);
        watches[lits[1]].push_back(ci);
        clauses.push_back(std::move(lits));
    }

    int propagate() {  // returns conflict clause index or kUndef
        while (qhead < trail.size()) {
            int p = trail[qhead++];
            int np = p ^ 1;  // literal that just became false
            std::vector<int> ws;
            ws.swap(watches[np]);
            std::size_t i = 0;
            for (; i < ws.size(); ++i) {
                int ci = ws[i];
                auto& c = clauses[ci];
                if (c[0] == np) std::swap(c[0], c[1]);
                if (value(c[0]) == 1) {
                    watches[np].push_back(ci);
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k)
                    if (value(c[k]) != 0) {
                        std::swap(c[1], c[k]);
                        watches[c[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                if (moved) continue;
                watches[np].push_back(ci);
                if (value(c[0]) == 0) {  // conflict; keep remaining watchers
                    for (std::size_t k = i + 1; k < ws.size(); ++k)
                        watches[np].push_back(ws[k]);
                    qhead = trail.size();
                    return ci;
                }
                enqueue(c[0], ci);
            }
        }
        return kUndef;
    }

    // first-UIP learning; returns learnt clause (slot 0 asserting) + backtrack level
    void analyze(int confl, std::vector<int>& learnt, int& bt_level) {
        learnt.assign(1, 0);
        int counter = 0, p = kUndef;
        int idx = static_cast<int>(trail.size()) - 1;
        std::vector<int> to_clear;
        do {
            const auto& c = clauses[confl];
            for (int q : c) {
                if (q == p) continue;
                int v = q >> 1;
                if (!seen[v] && level[v] > 0) {
                    seen[v] = 1;
                    to_clear.push_back(v);
                    bump(v);
                    if (level[v] >= decision_level())
                        ++counter;
                    else
                        learnt.push_back(q);
                }
            }
            while (!seen[trail[idx] >> 1]) --idx;
            p = trail[idx--];
            seen[p >> 1] = 0;
            confl = reason[p >> 1];
            --counter;
        } while (counter > 0);
        learnt[0] = p ^ 1;
        for (int v : to_clear) seen[v] = 0;

        bt_level = 0;
        if (learnt.size() > 1) {
            std::size_t best = 1;
            for (std::size_t k = 2; k < learnt.size(); ++k)
                if (level[learnt[k] >> 1] > level[learnt[best] >> 1]) best = k;
            std::swap(learnt[1], learnt[best]);
            bt_level = level[learnt[1] >> 1];
        }
    }

    int pick_branch() {
        while (!heap.empty()) {
            int v = heap_pop();
            if (assigns[v] == kUndef) return v;
        }
        return kUndef;
    }

    // 1, 2, 1, 1, 2, 4, ... restart scaling
    static int luby(int i) {
        for (int k = 1; k < 32; ++k)
            if (i == (1 << k) - 1) return 1 << (k - 1);
        int k = 1;
        while ((1 << k) - 1 < i) ++k;
        return luby(i - (1 << (k - 1)) + 1);
    }

    // 1 SAT, 0 UNSAT, kUndef restart
    int search(long long max_conflicts) {
        long long conflicts = 0;
        std::vector<int> learnt;
        while (true) {
            int confl = propagate();
            if (confl != kUndef) {
                ++conflicts;
                if (decision_level() == 0) return 0;
                int bt = 0;
                analyze(confl, learnt, bt);
                cancel_until(bt);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], kUndef);
                } else {
                    int ci = static_cast<int>(clauses.size());
                    attach(learnt);
                    enqueue(learnt[0], ci);
                }
                var_inc /= 0.95;
            } else {
                if (conflicts >= max_conflicts) {
                    cancel_until(0);
                    return kUndef;
                }
                int v = pick_branch();
                if (v == kUndef) return 1;
                trail_lim.push_back(static_cast<int>(trail.size()));
                enqueue(2 * v + (polarity[v] == 1 ? 0 : 1), kUndef);
            }
        }
    }

    int solve() {
        if (!ok) return 0;
        if (propagate() != kUndef) return 0;
        for (int restarts = 1;; ++restarts) {
            int r = search(100LL * luby(restarts));
            if (r != kUndef) return r;
        }
    }

    bool model_satisfies_all() const {
        for (const auto& c : clauses) {
            bool sat = false;
            for (int l : c)
                if (value(l) == 1) {
                    sat = true;
                    break;
                }
            if (!sat) return false;
        }
        return true;
    }
};

bool parse_dimacs(std::istream& in, Solver& s, std::vector<std::vector<int>>& raw, int& nvars) {
    std::string tok;
    nvars = 0;
    std::vector<int> cur;
    while (in >> tok) {
        if (tok == "c") {
            std::string rest;
            std::getline(in, rest);
        } else if (tok == "p") {
            std::string fmt;
            long long nc = 0;
            if (!(in >> fmt >> nvars >> nc)) return false;
        } else if (tok == "%") {
            break;
        } else {
            long long lit;
            try {
                lit = std::stoll(tok);
            } catch (...) {
                return false;
            }
            if (lit == 0) {
                raw.push_back(cur);
                cur.clear();
            } else {
                int v = static_cast<int>(std::llabs(lit)) - 1;
                if (v + 1 > nvars) nvars = v + 1;
                cur.push_back(2 * v + (lit < 0 ? 1 : 0));
            }
        }
    }
    if (!cur.empty()) raw.push_back(cur);  // tolerate a missing final 0
    (void)s;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (argc > 1) {
        file.open(argv[1]);
        if (!file) {
            std::fprintf(stderr, "cannot open %s\n", argv[1]);
            return 1;
        }
        in = &file;
    }
    Solver s;
    std::vector<std::vector<int>> raw;
    int nvars = 0;
    if (!parse_dimacs(*in, s, raw, nvars)) {
        std::fprintf(stderr, "parse error\n");
        return 1;
    }
    s.init(nvars);
    for (auto& c : raw)
        if (!s.add_clause(std::move(c))) break;

    int res = s.solve();
    if (res == 1 && !s.model_satisfies_all()) {
        std::fprintf(stderr, "internal error: model check failed\n");
        return 1;
    }
    if (res == 1) {
        std::printf("s SATISFIABLE\n");
        std::string line = "v";
        for (int v = 0; v < nvars; ++v) {
            line += " " + std::to_string(s.assigns[v] == 1 ? v + 1 : -(v + 1));
            if (line.size() > 72) {
                std::printf("%s\n", line.c_str());
                line = "v";
            }
        }
        line += " 0";
        std::printf("%s\n", line.c_str());
        return 10;
    }
    std::printf("s UNSATISFIABLE\n");
    return 20;
}
