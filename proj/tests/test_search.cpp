#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mramsey/cert_io.hpp"
#include "mramsey/detect.hpp"
#include "mramsey/formulas.hpp"
#include "mramsey/search.hpp"

using namespace mramsey;

namespace {

ColoringProblem problem(int j, int t, const std::string& targets) {
    return {make_shape(j, t), parse_target_list(targets)};
}

}  // namespace

TEST_CASE("known verdicts on small hosts") {
    struct Row { int j, t; const char* targets; Verdict want; };
    std::vector<Row> rows = {
        {3, 1, "K1,2;P4;2K2", Verdict::Colorable},
        {3, 2, "K1,2;P4;2K2", Verdict::NotColorable},   // m_3 = 2
        {2, 2, "K1,2;P4;2K2", Verdict::Colorable},
        {2, 3, "K1,2;P4;2K2", Verdict::NotColorable},   // m_2 = 3
        {3, 2, "2K2;C7", Verdict::Colorable},
        {3, 3, "2K2;C7", Verdict::NotColorable},        // m_3 = 3
        {4, 1, "2K2;C7", Verdict::Colorable},
        {4, 2, "2K2;C7", Verdict::NotColorable},        // m_4 = 2
        {2, 4, "2K2;C7", Verdict::Colorable},           // bipartite: C7 never appears
        {3, 2, "3K2;C7", Verdict::Colorable},
        {3, 3, "3K2;C7", Verdict::NotColorable},        // m_3 = 3
    };
    for (const auto& r : rows) {
        CAPTURE(r.j);
        CAPTURE(r.t);
        CAPTURE(r.targets);
        auto out = decide_colorable(problem(r.j, r.t, r.targets));
        CHECK(out.verdict == r.want);
        CHECK(out.nodes > 0);
        if (r.want == Verdict::Colorable) {
            REQUIRE(out.certificate.has_value());
            CHECK(verify_certificate(*out.certificate).pass);
        } else {
            CHECK(!out.certificate.has_value());
        }
    }
}

TEST_CASE("degenerate targets") {
    // an empty pattern slot can never be avoided: P_1 is in every graph
    auto out = decide_colorable(problem(2, 1, "P1;P4"));
    CHECK(out.verdict == Verdict::NotColorable);
    // a single color avoiding something absent from the host
    auto out2 = decide_colorable(problem(2, 2, "C7"));
    CHECK(out2.verdict == Verdict::Colorable);
    // K_{1,1} = one edge: a nonempty class always has one
    auto out3 = decide_colorable(problem(2, 1, "K1,1"));
    CHECK(out3.verdict == Verdict::NotColorable);
}

TEST_CASE("symmetry pruning changes node counts, never answers") {
    std::vector<std::pair<ColoringProblem, const char*>> cases = {
        {problem(3, 2, "K1,2;P4;2K2"), "three colors"},
        {problem(3, 2, "2K2;C7"), "colorable"},
        {problem(3, 3, "2K2;C7"), "not colorable"},
        {problem(2, 3, "K1,2;P4;3K2"), "colorable three"},
        {problem(4, 2, "2K2;C7"), "four parts"},
        {problem(2, 2, "2K2;2K2"), "identical targets"},
        {problem(2, 3, "P4;P4;P4"), "triple identical"},
    };
    for (auto& [prob, label] : cases) {
        CAPTURE(label);
        SearchConfig sym, nosym;
        nosym.symmetry = false;
        auto a = decide_colorable(prob, sym);
        auto b = decide_colorable(prob, nosym);
        REQUIRE(a.verdict == b.verdict);
        CHECK(a.nodes <= b.nodes);  // pruning can only shrink the tree
        if (a.verdict == Verdict::Colorable) {
            // both must land on the lexicographically least valid coloring
            REQUIRE(a.certificate.has_value());
            REQUIRE(b.certificate.has_value());
            CHECK(a.certificate->coloring == b.certificate->coloring);
        }
    }
}

TEST_CASE("search is deterministic run to run") {
    auto prob = problem(3, 2, "2K2;C7");
    auto first = decide_colorable(prob);
    for (int i = 0; i < 3; ++i) {
        auto again = decide_colorable(prob);
        CHECK(again.verdict == first.verdict);
        CHECK(again.nodes == first.nodes);
        REQUIRE(again.certificate.has_value());
        CHECK(again.certificate->coloring == first.certificate->coloring);
    }
}

TEST_CASE("parallel widths agree with sequential search") {
    std::vector<ColoringProblem> probs = {
        problem(3, 2, "K1,2;P4;2K2"),
        problem(3, 2, "2K2;C7"),
        problem(3, 3, "2K2;C7"),
        problem(4, 2, "3K2;C7"),
        problem(2, 4, "K1,2;P4;4K2"),
    };
    for (auto& prob : probs) {
        auto base = decide_colorable(prob);
        for (int width : {2, 4, 8}) {
            CAPTURE(prob.shape.parts);
            CAPTURE(prob.shape.class_size);
            CAPTURE(width);
            SearchConfig cfg;
            cfg.parallel_width = width;
            auto out = decide_colorable(prob, cfg);
            REQUIRE(out.verdict == base.verdict);
            if (base.verdict == Verdict::Colorable) {
                REQUIRE(out.certificate.has_value());
                // parallel search must return the same lex-least certificate
                CHECK(out.certificate->coloring == base.certificate->coloring);
                CHECK(verify_certificate(*out.certificate).pass);
            }
        }
    }
}

TEST_CASE("budget exhaustion is reported honestly") {
    SearchConfig tiny;
    tiny.node_budget = 50;
    auto out = decide_colorable(problem(4, 3, "3K2;C7"), tiny);
    CHECK(out.verdict == Verdict::BudgetExhausted);
    CHECK(!out.certificate.has_value());
    CHECK(out.nodes >= 50);
    CHECK(out.nodes < 50 + 1024);  // stops promptly after the budget line

    SearchConfig zero_time;
    zero_time.time_budget_seconds = 0.0;
    auto out2 = decide_colorable(problem(4, 3, "3K2;C7"), zero_time);
    CHECK(out2.verdict == Verdict::BudgetExhausted);

    // parallel budget exhaustion too
    SearchConfig par = tiny;
    par.parallel_width = 4;
    auto out3 = decide_colorable(problem(4, 3, "3K2;C7"), par);
    CHECK(out3.verdict == Verdict::BudgetExhausted);
}

TEST_CASE("lex-least certificate is stable under budget growth") {
    // once colorable is found, a bigger budget must not change the answer
    auto prob = problem(3, 2, "2K2;C7");
    SearchConfig big;
    big.node_budget = 1'000'000'000;
    auto a = decide_colorable(prob);
    auto b = decide_colorable(prob, big);
    CHECK(a.certificate->coloring == b.certificate->coloring);
}

TEST_CASE("compute_m reproduces closed-form values") {
    struct Row { int j; const char* targets; RamseyValue want; };
    std::vector<Row> rows = {
        {3, "K1,2;P4;2K2", RamseyValue::finite(2)},
        {2, "K1,2;P4;2K2", RamseyValue::finite(3)},
        {2, "K1,2;P4;3K2", RamseyValue::finite(4)},
        {3, "K1,2;P4;3K2", RamseyValue::finite(3)},
        {4, "K1,2;P4;2K2", RamseyValue::finite(2)},
        {3, "2K2;C7", RamseyValue::finite(3)},
        {4, "2K2;C7", RamseyValue::finite(2)},
        {3, "3K2;C7", RamseyValue::finite(3)},
    };
    for (const auto& r : rows) {
        CAPTURE(r.j);
        CAPTURE(r.targets);
        auto res = compute_m(r.j, parse_target_list(r.targets), 6);
        CHECK(res.value == r.want);
        REQUIRE(!res.rows.empty());
        // every row before the last is colorable; the last is the not-colorable stop
        for (std::size_t i = 0; i + 1 < res.rows.size(); ++i)
            CHECK(res.rows[i].verdict == Verdict::Colorable);
        CHECK(res.rows.back().verdict == Verdict::NotColorable);
        CHECK(res.rows.back().t == r.want.t);
    }
}

TEST_CASE("compute_m reports unknown when the scan range ends") {
    // bipartite host never holds C7, so every t is colorable: scan runs out
    auto res = compute_m(2, parse_target_list("2K2;C7"), 4);
    CHECK(res.value == RamseyValue::unknown(5));
    CHECK(res.rows.size() == 4);
    for (auto& row : res.rows) CHECK(row.verdict == Verdict::Colorable);
}

TEST_CASE("compute_m reports unknown on budget exhaustion") {
    SearchConfig tiny;
    tiny.node_budget = 40;
    auto res = compute_m(4, parse_target_list("3K2;C7"), 5, tiny);
    REQUIRE(res.value.kind == RamseyValue::Kind::Unknown);
    CHECK(res.rows.back().verdict == Verdict::BudgetExhausted);
}

TEST_CASE("scan row log format") {
    ScanRow row{3, Verdict::NotColorable, 326, 0.0004};
    CHECK(row.log_line() == "t=3 outcome=not_colorable nodes=326 seconds=0.000");
    ScanRow row2{1, Verdict::Colorable, 6, 1.2345};
    CHECK(row2.log_line() == "t=1 outcome=colorable nodes=6 seconds=1.234");
    CHECK(verdict_name(Verdict::BudgetExhausted) == "budget");
}

TEST_CASE("search certificates carry provenance and verify independently") {
    auto out = decide_colorable(problem(3, 2, "2K2;C7"));
    REQUIRE(out.certificate.has_value());
    CHECK(out.certificate->provenance.find("search") != std::string::npos);
    auto text = serialize_certificate(*out.certificate);
    auto back = deserialize_certificate(text);
    CHECK(verify_certificate(back).pass);
}
