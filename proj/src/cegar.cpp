#include "mramsey/cegar.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "mramsey/cnf.hpp"

namespace mramsey {

namespace {

using Clock = std::chrono::steady_clock;

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s)
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    return out + "'";
}

std::string capture(const std::string& cmd) {
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw ProtocolError("cannot spawn solver: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    ::pclose(pipe);  // exit status deliberately ignored
    return out;
}

std::filesystem::path fresh_workdir() {
    static std::atomic<int> counter{0};
    auto base = std::filesystem::temp_directory_path();
    auto dir = base / ("mramsey-cegar-" + std::to_string(::getpid()) + "-" +
                       std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

SolverBridge SolverBridge::default_bridge() {
    SolverBridge b;
    if (const char* env = std::getenv("MRAMSEY_SAT_SOLVER"); env && *env) {
        b.command = env;
        if (b.command.find("{cnf}") == std::string::npos) b.command += " {cnf}";
        return b;
    }
    std::error_code ec;
    auto self = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        auto cand = self.parent_path() / "mramsey-sat";
        if (std::filesystem::exists(cand, ec)) {
            b.command = shell_quote(cand.string()) + " {cnf}";
            return b;
        }
    }
    b.command = "mramsey-sat {cnf}";
    return b;
}

SolverRun run_solver(const SolverBridge& bridge, const std::filesystem::path& cnf_file,
                     int num_vars) {
    std::string cmd = bridge.command;
    auto pos = cmd.find("{cnf}");
    if (pos == std::string::npos)
        cmd += " " + shell_quote(cnf_file.string());
    else
        cmd.replace(pos, 5, shell_quote(cnf_file.string()));
    if (bridge.timeout_seconds > 0) {
        char pre[64];
        std::snprintf(pre, sizeof(pre), "timeout %.3f ", bridge.timeout_seconds);
        cmd = pre + cmd;
    }
    cmd += " 2>/dev/null";

    std::string text = capture(cmd);

    SolverRun run;
    run.model.assign(num_vars + 1, false);
    bool saw_model = false, model_done = false;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.rfind("s ", 0) == 0) {
            if (line.find("UNSATISFIABLE") != std::string::npos)
                run.status = SolverRun::Status::Unsat;
            else if (line.find("SATISFIABLE") != std::string::npos)
                run.status = SolverRun::Status::Sat;
            else
                throw ProtocolError("unrecognized status line: \"" + line + "\"");
        } else if (line.rfind("v", 0) == 0 &&
                   (line.size() == 1 || line[1] == ' ' || line[1] == '\t')) {
            saw_model = true;
            std::istringstream ls(line.substr(1));
            std::string tok;
            while (ls >> tok) {
                long long lit;
                try {
                    std::size_t used = 0;
                    lit = std::stoll(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                } catch (...) {
                    throw ProtocolError("bad model token \"" + tok + "\" in line: \"" + line +
                                        "\"");
                }
                if (lit == 0) {
                    model_done = true;
                    break;
                }
                long long v = lit < 0 ? -lit : lit;
                if (v > num_vars)
                    throw ProtocolError("model variable " + std::to_string(v) +
                                        " out of range (have " + std::to_string(num_vars) + ")");
                run.model[static_cast<std::size_t>(v)] = lit > 0;
            }
            if (model_done) continue;
        }
    }
    if (run.status == SolverRun::Status::Sat && !saw_model)
        throw ProtocolError("satisfiable verdict without any model line");
    if (run.status != SolverRun::Status::Sat) run.model.clear();
    return run;
}

SearchOutcome solve_cegar(const ColoringProblem& problem, const SolverBridge& bridge,
                          const CegarConfig& cfg) {
    EdgeTable host(problem.shape);
    const int E = host.edge_count(), r = problem.colors();
    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(cfg.time_budget_seconds));

    CnfInstance cnf = encode_eager(problem, cfg.eager_threshold);

    bool own_dir = cfg.workdir.empty();
    std::filesystem::path dir = own_dir ? fresh_workdir() : cfg.workdir;
    std::filesystem::create_directories(dir);
    auto cnf_path = dir / "problem.cnf";
    auto map_path = dir / "problem.map";
    {
        std::ofstream map(map_path, std::ios::binary);
        map << cnf.to_map(host);
    }
    auto cleanup = [&]() {
        if (cfg.keep_files) return;
        std::error_code ec;
        std::filesystem::remove(cnf_path, ec);
        std::filesystem::remove(map_path, ec);
        if (own_dir) std::filesystem::remove(dir, ec);
    };

    // clause bodies accumulate across iterations; only the header is rewritten
    std::string body;
    long long clause_count = 0;
    auto append_clause = [&](const std::vector<int>& lits) {
        for (int lit : lits) {
            body += std::to_string(lit);
            body += ' ';
        }
        body += "0\n";
        ++clause_count;
    };
    for (const auto& cl : cnf.clauses) append_clause(cl);

    std::uint64_t calls = 0;
    auto give_up = [&]() -> SearchOutcome {
        cleanup();
        return {Verdict::BudgetExhausted, std::nullopt, calls, 0};
    };

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        double remaining = std::chrono::duration<double>(deadline - Clock::now()).count();
        if (remaining <= 0) return give_up();
        {
            std::ofstream out(cnf_path, std::ios::binary);
            out << "p cnf " << cnf.num_vars << " " << clause_count << "\n" << body;
        }
        SolverBridge call = bridge;
        call.timeout_seconds = call.timeout_seconds > 0
                                   ? std::min(call.timeout_seconds, remaining)
                                   : remaining;
        SolverRun run;
        try {
            run = run_solver(call, cnf_path, cnf.num_vars);
        } catch (...) {
            cleanup();
            throw;
        }
        ++calls;
        if (run.status == SolverRun::Status::NoVerdict) return give_up();  // crash or timeout
        if (run.status == SolverRun::Status::Unsat) {
            cleanup();
            return {Verdict::NotColorable, std::nullopt, calls, 0};
        }

        EdgeColoring col(E, r);
        for (int e = 0; e < E; ++e) {
            int got = -1;
            for (int c = 0; c < r; ++c)
                if (run.model[cnf.var(e, c)]) {
                    if (got >= 0) {
                        cleanup();
                        throw ProtocolError("model assigns two colors to edge " +
                                            std::to_string(e));
                    }
                    got = c;
                }
            if (got < 0) {
                cleanup();
                throw ProtocolError("model assigns no color to edge " + std::to_string(e));
            }
            col.set_color(e, got);
        }

        std::vector<VerifyFailure> violations;
        for (int c = 0; c < r; ++c) {
            auto res = contains_pattern(host, col.class_edges(c), problem.targets[c]);
            if (res.found) violations.push_back({c, problem.targets[c], std::move(res.witness)});
        }
        if (violations.empty()) {
            Certificate cert{problem, std::move(col), "search:cegar"};
            if (!verify_certificate(cert).pass)
                throw std::logic_error("cegar accepted a coloring that fails verification");
            cleanup();
            return {Verdict::Colorable, std::move(cert), calls, 0};
        }
        if (cfg.on_iteration) cfg.on_iteration({iter, clause_count, violations});

        for (const auto& f : violations) {
            auto block = [&](const std::vector<int>& copy) {
                std::vector<int> clause;
                clause.reserve(copy.size());
                for (int e : copy) clause.push_back(-cnf.var(e, f.color));
                append_clause(clause);
            };
            if (cfg.sweep) {
                long long added = 0;
                for_each_copy(host, col.class_edges(f.color), f.target,
                              [&](const std::vector<int>& copy) {
                                  block(copy);
                                  return ++added < cfg.sweep_cap;
                              });
            } else {
                block(f.witness);
            }
        }
    }
    return give_up();
}

}  // namespace mramsey
