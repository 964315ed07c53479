// mramsey: compute, witness, search, and certify size multipartite Ramsey
// numbers for the star/path/stripe and stripe/cycle families.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mramsey/cegar.hpp"
#include "mramsey/cert_io.hpp"
#include "mramsey/cnf.hpp"
#include "mramsey/detect.hpp"
#include "mramsey/formulas.hpp"
#include "mramsey/graph.hpp"
#include "mramsey/search.hpp"
#include "mramsey/witness.hpp"

using namespace mramsey;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitBudget = 3;

std::string host_name(const PartitionShape& s) {
    return "K_{" + std::to_string(s.parts) + "x" + std::to_string(s.class_size) + "}";
}

ordered_json value_json(const RamseyValue& v) {
    ordered_json js;
    switch (v.kind) {
        case RamseyValue::Kind::Finite:
            js["kind"] = "finite";
            js["t"] = v.t;
            break;
        case RamseyValue::Kind::Infinite: js["kind"] = "infinite"; break;
        case RamseyValue::Kind::Unknown:
            js["kind"] = "unknown";
            if (v.lower_bound) js["lower_bound"] = *v.lower_bound;
            break;
    }
    return js;
}

std::string verdict_token(Verdict v) {
    return v == Verdict::BudgetExhausted ? "budget_exhausted" : verdict_name(v);
}

std::string targets_string(const std::vector<TargetPattern>& ts) {
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? ";" : "") + ts[i].to_string();
    return out;
}

// ---------- formula ----------

struct FormulaArgs {
    std::string family;
    int j = 0, n = 0;
    bool json = false;
};

int run_formula(const FormulaArgs& a) {
    Family fam{parse_family(a.family), a.j, a.n};
    RamseyValue v = family_value(fam);
    bool cited = fam.kind == FamilyKind::StripeC6;
    if (a.json) {
        ordered_json js;
        js["family"] = a.family;
        js["j"] = a.j;
        js["n"] = a.n;
        js["value"] = value_json(v);
        if (cited) js["note"] = "cited value, not derived here";
        std::cout << js.dump() << "\n";
    } else {
        std::cout << v.to_string() << "\n";
        if (cited) std::cout << "note: cited value, not derived here\n";
    }
    return kExitOk;
}

// ---------- search ----------

struct BackendRun {
    std::string backend;
    SearchOutcome outcome;
    double seconds = 0;
};

struct SearchArgs {
    int j = 0, t = 0, scan_max = 0;
    std::string targets, backend = "backtrack", cert_path, solver_cmd;
    std::uint64_t nodes = 100'000'000;
    double seconds = 600.0, solver_timeout = 0;
    bool no_symmetry = false, sweep = false, json = false;
    int width = 1;
    long long eager_threshold = 200000;
};

SolverBridge make_bridge(const SearchArgs& a) {
    SolverBridge b = a.solver_cmd.empty() ? SolverBridge::default_bridge()
                                          : SolverBridge{a.solver_cmd, 0};
    if (!a.solver_cmd.empty() && b.command.find("{cnf}") == std::string::npos)
        b.command += " {cnf}";
    b.timeout_seconds = a.solver_timeout;
    return b;
}

BackendRun run_one_backend(const std::string& backend, const ColoringProblem& problem,
                           const SearchArgs& a) {
    auto start = std::chrono::steady_clock::now();
    SearchOutcome oc;
    if (backend == "backtrack") {
        SearchConfig cfg;
        cfg.node_budget = a.nodes;
        cfg.time_budget_seconds = a.seconds;
        cfg.symmetry = !a.no_symmetry;
        cfg.parallel_width = a.width;
        oc = decide_colorable(problem, cfg);
    } else {
        CegarConfig cfg;
        cfg.time_budget_seconds = a.seconds;
        cfg.sweep = a.sweep;
        cfg.eager_threshold = a.eager_threshold;
        oc = solve_cegar(problem, make_bridge(a), cfg);
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {backend, std::move(oc), secs};
}

ordered_json backend_json(const BackendRun& r) {
    ordered_json js;
    js["backend"] = r.backend;
    js["verdict"] = verdict_token(r.outcome.verdict);
    js["nodes"] = r.outcome.nodes;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", r.seconds);
    js["seconds"] = std::stod(buf);
    return js;
}

int run_search(const SearchArgs& a) {
    auto targets = parse_target_list(a.targets);

    if (a.scan_max > 0) {
        SearchConfig cfg;
        cfg.node_budget = a.nodes;
        cfg.time_budget_seconds = a.seconds;
        cfg.symmetry = !a.no_symmetry;
        cfg.parallel_width = a.width;
        ComputeResult res = compute_m(a.j, targets, a.scan_max, cfg);
        if (a.json) {
            ordered_json js;
            js["j"] = a.j;
            js["targets"] = targets_string(targets);
            js["rows"] = ordered_json::array();
            for (const auto& row : res.rows) {
                ordered_json jr;
                jr["t"] = row.t;
                jr["outcome"] = verdict_name(row.verdict);
                jr["nodes"] = row.nodes;
                jr["seconds"] = row.seconds;
                js["rows"].push_back(jr);
            }
            js["value"] = value_json(res.value);
            std::cout << js.dump() << "\n";
        } else {
            for (const auto& row : res.rows) std::cout << row.log_line() << "\n";
            std::cout << "m = " << res.value.to_string() << "\n";
        }
        bool budget = !res.rows.empty() && res.rows.back().verdict == Verdict::BudgetExhausted;
        return budget ? kExitBudget : kExitOk;
    }

    ColoringProblem problem{make_shape(a.j, a.t), targets};
    std::vector<BackendRun> runs;
    if (a.backend == "both") {
        runs.push_back(run_one_backend("backtrack", problem, a));
        runs.push_back(run_one_backend("cegar", problem, a));
    } else {
        runs.push_back(run_one_backend(a.backend, problem, a));
    }

    bool disagree = false;
    Verdict overall = Verdict::BudgetExhausted;
    const BackendRun* winner = nullptr;
    for (const auto& r : runs) {
        if (r.outcome.verdict == Verdict::BudgetExhausted) continue;
        if (winner && winner->outcome.verdict != r.outcome.verdict) disagree = true;
        if (!winner) {
            winner = &r;
            overall = r.outcome.verdict;
        }
    }

    std::optional<std::string> written;
    if (!disagree && overall == Verdict::Colorable && !a.cert_path.empty()) {
        for (const auto& r : runs)
            if (r.outcome.certificate) {
                write_certificate_file(a.cert_path, *r.outcome.certificate);
                written = a.cert_path;
                break;
            }
    }

    if (a.json) {
        ordered_json js;
        js["j"] = a.j;
        js["t"] = a.t;
        js["targets"] = targets_string(targets);
        js["verdict"] = disagree ? "disagreement" : verdict_token(overall);
        js["backends"] = ordered_json::array();
        for (const auto& r : runs) js["backends"].push_back(backend_json(r));
        js["certificate"] = written ? ordered_json(*written) : ordered_json(nullptr);
        std::cout << js.dump() << "\n";
    } else {
        if (disagree) {
            std::cout << "backend disagreement:";
            for (const auto& r : runs)
                std::cout << " " << r.backend << "=" << verdict_token(r.outcome.verdict);
            std::cout << "\n";
        } else {
            std::cout << verdict_token(overall) << "\n";
        }
        for (const auto& r : runs) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "backend=%s verdict=%s nodes=%llu seconds=%.3f",
                          r.backend.c_str(), verdict_token(r.outcome.verdict).c_str(),
                          static_cast<unsigned long long>(r.outcome.nodes), r.seconds);
            std::cout << buf << "\n";
        }
        if (written) std::cout << "certificate: " << *written << "\n";
    }
    if (disagree) return kExitFail;
    return overall == Verdict::BudgetExhausted ? kExitBudget : kExitOk;
}

// ---------- witness ----------

struct WitnessArgs {
    std::string kind, out_path;
    int j = 0, n = 0;
    bool json = false;
};

int run_witness(const WitnessArgs& a) {
    Certificate cert = [&]() {
        if (a.kind == "null-star-rest") return witness_null_star_rest(a.j, a.n);
        if (a.kind == "bipartite-split3") {
            if (a.j != 0 && a.j != 3)
                throw DomainError("bipartite-split3 is a 3-part construction (got j=" +
                                  std::to_string(a.j) + ")");
            return witness_bipartite_split3(a.n);
        }
        if (a.kind == "part-vs-rest") return witness_part_vs_rest(a.j, a.n);
        throw DomainError("unknown construction \"" + a.kind + "\"");
    }();
    const auto& shape = cert.problem.shape;
    EdgeTable host(shape);
    bool verified = verify_certificate(cert).pass;  // constructions re-verify; belt and braces
    if (!a.out_path.empty()) write_certificate_file(a.out_path, cert);

    if (a.json) {
        ordered_json js;
        js["construction"] = a.kind;
        js["j"] = shape.parts;
        js["n"] = a.n;
        js["t"] = shape.class_size;
        js["edges"] = host.edge_count();
        js["colors"] = cert.problem.colors();
        js["verified"] = verified;
        js["path"] = a.out_path.empty() ? ordered_json(nullptr) : ordered_json(a.out_path);
        std::cout << js.dump() << "\n";
    } else if (a.out_path.empty()) {
        std::cout << serialize_certificate(cert);  // pipe-friendly
    } else {
        std::cout << "construction=" << a.kind << " j=" << shape.parts << " n=" << a.n
                  << " host=" << host_name(shape) << " edges=" << host.edge_count()
                  << " colors=" << cert.problem.colors() << "\n";
        std::cout << "verify " << (verified ? "PASS" : "FAIL") << "\n";
        std::cout << "written: " << a.out_path << "\n";
    }
    return verified ? kExitOk : kExitFail;
}

// ---------- verify ----------

int run_verify(const std::string& path, bool json) {
    Certificate cert = read_certificate_file(path);
    VerifyReport rep = verify_certificate(cert);
    if (json) {
        EdgeTable host(cert.problem.shape);
        ordered_json js;
        js["path"] = path;
        js["pass"] = rep.pass;
        js["failures"] = ordered_json::array();
        for (const auto& f : rep.failures) {
            ordered_json jf;
            jf["color"] = f.color;
            jf["target"] = f.target.to_string();
            jf["witness"] = ordered_json::array();
            for (int e : f.witness) {
                auto [u, v] = host.endpoints(e);
                jf["witness"].push_back({u, v});
            }
            js["failures"].push_back(jf);
        }
        std::cout << js.dump() << "\n";
    } else {
        std::cout << rep.to_text(cert);
    }
    return rep.pass ? kExitOk : kExitFail;
}

// ---------- table ----------

struct TableArgs {
    int theorem = 1, max_n = 4;
    std::uint64_t nodes = 20'000'000;
    double seconds = 60.0;
    std::string backend = "auto";  // auto: backtrack for theorem 1, cegar for theorem 2
    bool json = false;
};

struct TableRow {
    int j = 0, n = 0;
    RamseyValue m;
    int witness_t = 0;
    std::string witness_status;  // "PASS:null-star-rest", "FAIL", "SKIPPED(budget)", "-"
    int search_t = 0;
    std::string search_status;  // "not_colorable", "colorable", "SKIPPED(budget)", "-"
    bool agree = true;
};

std::string row_text(const TableRow& r) {
    std::string m = r.m.to_string();
    std::string out = "j=" + std::to_string(r.j) + " n=" + std::to_string(r.n) + " m=" + m;
    out += " witness[t=" + std::to_string(r.witness_t) + "]=" + r.witness_status;
    out += " search[t=" + std::to_string(r.search_t) + "]=" + r.search_status;
    out += r.agree ? " AGREE" : " DISAGREE";
    return out;
}

// trivial coloring putting every edge in `color`; null when some target breaks it
std::optional<Certificate> all_one_color(const PartitionShape& shape,
                                         const std::vector<TargetPattern>& targets, int color) {
    EdgeTable host(shape);
    EdgeColoring col(host.edge_count(), static_cast<int>(targets.size()));
    for (int e = 0; e < host.edge_count(); ++e) col.set_color(e, color);
    Certificate cert{{shape, targets}, std::move(col), "witness:all-one-color"};
    if (!verify_certificate(cert).pass) return std::nullopt;
    return cert;
}

int run_table(const TableArgs& a) {
    bool theorem1 = a.theorem == 1;
    std::string backend = a.backend;
    if (backend == "auto") backend = theorem1 ? "backtrack" : "cegar";

    std::vector<TableRow> rows;
    for (int j = 2; j <= 4; ++j) {
        for (int n = 2; n <= a.max_n; ++n) {
            Family fam{theorem1 ? FamilyKind::StarPathStripe : FamilyKind::StripeC7, j, n};
            auto targets = family_targets(fam);
            TableRow row;
            row.j = j;
            row.n = n;
            row.m = family_value(fam);

            int sample_t;  // witness at m-1 (finite) or a spot check (infinite)
            if (row.m.kind == RamseyValue::Kind::Finite) {
                sample_t = row.m.t - 1;
            } else {
                sample_t = 2;
            }
            row.witness_t = sample_t;
            row.search_t = row.m.kind == RamseyValue::Kind::Finite ? row.m.t : sample_t;

            // witness: family construction, else a trivial coloring, else search
            std::optional<Certificate> wit;
            std::string label;
            if (sample_t < 1) {
                row.witness_status = "-";
            } else {
                try {
                    if (theorem1) {
                        wit = witness_null_star_rest(j, n);
                        label = "null-star-rest";
                    } else if (j == 3 && n >= 3) {
                        wit = witness_bipartite_split3(n);
                        label = "bipartite-split3";
                    } else if (j >= 3 && n >= j) {
                        wit = witness_part_vs_rest(j, n);
                        label = "part-vs-rest";
                    }
                } catch (const DomainError&) {
                }
                if (wit && wit->problem.shape.class_size != sample_t) wit.reset();
                if (!wit) {
                    int blue = static_cast<int>(targets.size()) - 1;
                    wit = all_one_color(make_shape(j, sample_t), targets, blue);
                    label = "all-blue";
                }
                if (!wit) {
                    SearchConfig cfg;
                    cfg.node_budget = a.nodes;
                    cfg.time_budget_seconds = a.seconds;
                    auto oc = decide_colorable({make_shape(j, sample_t), targets}, cfg);
                    if (oc.verdict == Verdict::Colorable) {
                        wit = oc.certificate;
                        label = "search";
                    } else if (oc.verdict == Verdict::BudgetExhausted) {
                        row.witness_status = "SKIPPED(budget)";
                    } else {
                        row.witness_status = "FAIL";  // no coloring exists below m
                        row.agree = false;
                    }
                }
                if (wit) {
                    bool ok = verify_certificate(*wit).pass;
                    row.witness_status = (ok ? "PASS:" : "FAIL:") + label;
                    if (!ok) row.agree = false;
                }
            }

            // search at t = m (finite) or the spot check (infinite: expect colorable)
            {
                SearchArgs sa;
                sa.nodes = a.nodes;
                sa.seconds = a.seconds;
                sa.sweep = true;
                ColoringProblem problem{make_shape(j, row.search_t), targets};
                BackendRun run = run_one_backend(backend, problem, sa);
                Verdict v = run.outcome.verdict;
                if (v == Verdict::BudgetExhausted) {
                    row.search_status = "SKIPPED(budget)";
                } else {
                    row.search_status = verdict_name(v);
                    bool expect_colorable = row.m.kind != RamseyValue::Kind::Finite;
                    if ((v == Verdict::Colorable) != expect_colorable) row.agree = false;
                }
            }
            rows.push_back(std::move(row));
        }
    }

    bool all_agree = true;
    for (const auto& r : rows) all_agree = all_agree && r.agree;
    if (a.json) {
        ordered_json js;
        js["theorem"] = a.theorem;
        js["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json jr;
            jr["j"] = r.j;
            jr["n"] = r.n;
            jr["m"] = value_json(r.m);
            jr["witness_t"] = r.witness_t;
            jr["witness"] = r.witness_status;
            jr["search_t"] = r.search_t;
            jr["search"] = r.search_status;
            jr["agree"] = r.agree;
            js["rows"].push_back(jr);
        }
        js["all_agree"] = all_agree;
        std::cout << js.dump() << "\n";
    } else {
        std::cout << "theorem " << a.theorem << " cross-check\n";
        for (const auto& r : rows) std::cout << row_text(r) << "\n";
        std::cout << (all_agree ? "table AGREE" : "table DISAGREE") << "\n";
    }
    return all_agree ? kExitOk : kExitFail;
}

// ---------- obscheck ----------

int run_obscheck(bool json) {
    Observation1Report rep = check_observation1();
    if (json) {
        ordered_json js;
        js["hosts"] = ordered_json::array();
        for (const auto& h : rep.hosts) {
            ordered_json jh;
            jh["name"] = h.name;
            jh["subsets"] = h.subsets;
            jh["star_branch"] = h.star_branch;
            jh["path_branch"] = h.path_branch;
            jh["both"] = h.both;
            jh["failures"] = h.failures;
            js["hosts"].push_back(jh);
        }
        js["pass"] = rep.pass;
        std::cout << js.dump() << "\n";
    } else {
        std::cout << rep.to_text();
    }
    return rep.pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"size multipartite Ramsey numbers for (K_{1,2}, P_4, nK_2) and (nK_2, C_7)"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    FormulaArgs fa;
    auto* formula = app.add_subcommand("formula", "closed-form value of a family");
    formula->add_option("--family", fa.family, "star-path-stripe | stripe-c7 | stripe-c6")
        ->required();
    formula->add_option("--j", fa.j, "number of parts")->required();
    formula->add_option("--n", fa.n, "stripe size n")->required();

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "decide colorability of one host, or scan t");
    search->add_option("--j", sa.j, "number of parts")->required();
    search->add_option("--t", sa.t, "part size");
    search->add_option("--scan", sa.scan_max, "scan t = 1..N instead of a single host");
    search->add_option("--targets", sa.targets, "e.g. \"K1,2;P4;3K2\" or \"2K2;C7\"")
        ->required();
    search->add_option("--backend", sa.backend)
        ->check(CLI::IsMember({"backtrack", "cegar", "both"}));
    search->add_option("--nodes", sa.nodes, "node budget");
    search->add_option("--seconds", sa.seconds, "time budget per backend");
    search->add_flag("--no-symmetry", sa.no_symmetry, "disable symmetry pruning");
    search->add_option("--width", sa.width, "parallel worker count");
    search->add_option("--cert", sa.cert_path, "write certificate here when colorable");
    search->add_flag("--sweep", sa.sweep, "cegar: block all copies in a violating class");
    search->add_option("--solver", sa.solver_cmd, "solver command template with {cnf}");
    search->add_option("--solver-timeout", sa.solver_timeout, "seconds per solver call");
    search->add_option("--eager-threshold", sa.eager_threshold);

    WitnessArgs wa;
    auto* witness = app.add_subcommand("witness", "build a lower-bound certificate");
    witness->add_option("--kind", wa.kind,
                        "null-star-rest | bipartite-split3 | part-vs-rest")
        ->required();
    witness->add_option("--j", wa.j, "number of parts");
    witness->add_option("--n", wa.n, "stripe size n")->required();
    witness->add_option("--out", wa.out_path, "output path (default: print JSON)");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "re-check a certificate file");
    verify->add_option("file", verify_path, "certificate JSON")->required();

    TableArgs ta;
    auto* table = app.add_subcommand("table", "cross-check formulas against evidence");
    table->add_option("--theorem", ta.theorem, "1: star/path/stripe, 2: stripe/c7")
        ->check(CLI::IsMember({"1", "2"}));
    table->add_option("--max-n", ta.max_n);
    table->add_option("--nodes", ta.nodes, "per-cell node budget");
    table->add_option("--seconds", ta.seconds, "per-cell time budget");
    table->add_option("--backend", ta.backend)
        ->check(CLI::IsMember({"auto", "backtrack", "cegar"}));

    auto* obscheck =
        app.add_subcommand("obscheck", "exhaustive star-or-complement-path check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    bool json = format == "json";
    fa.json = sa.json = wa.json = ta.json = json;
    try {
        if (*formula) return run_formula(fa);
        if (*search) {
            if ((sa.t <= 0) == (sa.scan_max <= 0)) {
                std::cerr << "usage error: pass exactly one of --t or --scan\n";
                return kExitUsage;
            }
            return run_search(sa);
        }
        if (*witness) return run_witness(wa);
        if (*verify) return run_verify(verify_path, json);
        if (*table) return run_table(ta);
        if (*obscheck) return run_obscheck(json);
    } catch (const CertError& e) {
        std::cerr << e.what() << "\n";
        return kExitFail;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ProtocolError& e) {
        std::cerr << "protocol error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
