#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "mramsey/cert_io.hpp"
#include "mramsey/graph.hpp"

using namespace mramsey;

TEST_CASE("shape counts") {
    // (parts, class_size) -> vertices, edges
    struct Row { int j, t, v; long long e; };
    for (auto [j, t, v, e] : {Row{3, 2, 6, 12}, Row{2, 3, 6, 9}, Row{4, 1, 4, 6},
                              Row{2, 1, 2, 1}, Row{4, 3, 12, 54}, Row{1, 5, 5, 0}}) {
        auto s = make_shape(j, t);
        CHECK(s.vertex_count() == v);
        CHECK(s.edge_count() == e);
    }
    CHECK_THROWS_AS(make_shape(0, 2), DomainError);
    CHECK_THROWS_AS(make_shape(3, 0), DomainError);
    CHECK_THROWS_AS(make_shape(-1, -1), DomainError);

    auto s = make_shape(3, 4);
    CHECK(s.part_of(0) == 0);
    CHECK(s.part_of(3) == 0);
    CHECK(s.part_of(4) == 1);
    CHECK(s.part_of(11) == 2);
}

TEST_CASE("edge table from shape is canonical lex order") {
    EdgeTable host(make_shape(3, 2));
    REQUIRE(host.edge_count() == 12);
    // Lexicographic on (u, v), cross-part only.
    VertexPair prev{-1, -1};
    for (int e = 0; e < host.edge_count(); ++e) {
        auto p = host.endpoints(e);
        CHECK(p.u < p.v);
        CHECK(host.shape()->part_of(p.u) != host.shape()->part_of(p.v));
        CHECK(prev < p);
        prev = p;
        CHECK(host.id_of(p.u, p.v) == e);
        CHECK(host.id_of(p.v, p.u) == e);  // order-insensitive lookup
    }
    // First and last edges of K_{3x2} pinned down.
    CHECK(host.endpoints(0) == VertexPair{0, 2});
    CHECK(host.endpoints(11) == VertexPair{3, 5});
    CHECK(!host.has_pair(0, 1));  // same part
    CHECK(host.has_pair(1, 4));
    CHECK_THROWS_AS(host.id_of(0, 1), std::out_of_range);
}

TEST_CASE("ad-hoc edge table normalizes, sorts, rejects junk") {
    EdgeTable g(4, {{2, 0}, {3, 1}, {0, 1}});
    CHECK(g.edge_count() == 3);
    CHECK(g.endpoints(0) == VertexPair{0, 1});  // sorted after normalization
    CHECK(g.endpoints(1) == VertexPair{0, 2});
    CHECK(g.endpoints(2) == VertexPair{1, 3});
    CHECK(!g.shape().has_value());

    CHECK_THROWS_AS(EdgeTable(3, {{0, 0}}), DomainError);          // loop
    CHECK_THROWS_AS(EdgeTable(3, {{0, 3}}), DomainError);          // out of range
    CHECK_THROWS_AS(EdgeTable(3, {{0, 1}, {1, 0}}), DomainError);  // dup after normalize

    // incident lists sorted by other endpoint
    for (int v = 0; v < g.vertex_count(); ++v) {
        int last = -1;
        for (auto [eid, other] : g.incident()[v]) {
            CHECK(other > last);
            last = other;
            auto p = g.endpoints(eid);
            CHECK(((p.u == v && p.v == other) || (p.v == v && p.u == other)));
        }
    }
}

TEST_CASE("edge set bit operations") {
    EdgeSet s(70);  // straddles a word boundary
    CHECK(s.count() == 0);
    s.set(0);
    s.set(63);
    s.set(64);
    s.set(69);
    CHECK(s.count() == 4);
    CHECK(s.ids() == std::vector<int>{0, 63, 64, 69});
    s.reset(63);
    CHECK(!s.test(63));
    CHECK(s.count() == 3);

    auto c = s.complement();
    CHECK(c.count() == 67);
    for (int e = 0; e < 70; ++e) CHECK(c.test(e) == !s.test(e));

    EdgeSet t(70);
    t.set(0);
    t.set(5);
    EdgeSet u = s;
    u |= t;
    CHECK(u.count() == 4);
    u &= t;
    CHECK(u.ids() == std::vector<int>{0, 5});

    CHECK(EdgeSet::full(70).count() == 70);
    CHECK(EdgeSet::full(70).complement().count() == 0);
    CHECK(EdgeSet::full(64).count() == 64);  // exact word multiple, no tail mask

    EdgeTable host(make_shape(2, 2));
    EdgeSet wrong(3);
    CHECK_THROWS_AS(complement_within(host, wrong), DomainError);
    EdgeSet right(host.edge_count());
    right.set(1);
    CHECK(complement_within(host, right).count() == host.edge_count() - 1);
}

TEST_CASE("target pattern parse and print") {
    CHECK(TargetPattern::parse("K1,2") == TargetPattern::star(2));
    CHECK(TargetPattern::parse("P4") == TargetPattern::path(4));
    CHECK(TargetPattern::parse("3K2") == TargetPattern::stripe(3));
    CHECK(TargetPattern::parse("C7") == TargetPattern::cycle(7));
    CHECK(TargetPattern::parse("1K2") == TargetPattern::stripe(1));
    CHECK(TargetPattern::parse("K1,10") == TargetPattern::star(10));

    for (auto tok : {"K1,2", "P4", "3K2", "C7", "K1,1", "12K2"})
        CHECK(TargetPattern::parse(tok).to_string() == tok);

    for (auto bad : {"", "Q3", "K2,2", "P", "C", "K2", "xK2", "P4x", "C2", "P0", "0K2", "K1,0"}) {
        CHECK_THROWS_AS(TargetPattern::parse(bad), DomainError);
    }
    // the error names the offending token
    try {
        TargetPattern::parse("Q3");
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("\"Q3\"") != std::string::npos);
    }

    CHECK_THROWS_AS(TargetPattern::cycle(2), DomainError);
    CHECK_THROWS_AS(TargetPattern::star(0), DomainError);

    auto list = parse_target_list("K1,2;P4;2K2");
    REQUIRE(list.size() == 3);
    CHECK(list[0] == TargetPattern::star(2));
    CHECK(list[1] == TargetPattern::path(4));
    CHECK(list[2] == TargetPattern::stripe(2));
    CHECK_THROWS_AS(parse_target_list("K1,2;;P4"), DomainError);
    CHECK_THROWS_AS(parse_target_list(""), DomainError);
}

TEST_CASE("coloring class extraction") {
    EdgeColoring col(5, 3);
    col.set_color(0, 1);
    col.set_color(2, 1);
    col.set_color(4, 2);
    CHECK(col.class_edges(0).ids() == std::vector<int>{1, 3});
    CHECK(col.class_edges(1).ids() == std::vector<int>{0, 2});
    CHECK(col.class_edges(2).ids() == std::vector<int>{4});
}

TEST_CASE("ramsey value rendering") {
    CHECK(RamseyValue::finite(3).to_string() == "Finite 3");
    CHECK(RamseyValue::infinite().to_string() == "Infinite");
    CHECK(RamseyValue::unknown().to_string() == "Unknown");
    CHECK(RamseyValue::unknown(4).to_string() == "Unknown lower_bound=4");
}

static Certificate tiny_cert() {
    ColoringProblem prob{make_shape(2, 1), {TargetPattern::star(1)}};
    EdgeColoring col(1, 1);
    return Certificate{prob, col, "unit"};
}

TEST_CASE("certificate serialization is byte-stable") {
    std::string expect =
        "{\"format\":\"mramsey-cert-v1\",\"j\":2,\"t\":1,\"colors\":1,"
        "\"targets\":[{\"kind\":\"star\",\"param\":1}],"
        "\"edges\":[[0,1,0]],\"provenance\":\"unit\"}\n";
    CHECK(serialize_certificate(tiny_cert()) == expect);
    // serialize -> deserialize -> serialize is the identity on bytes
    auto back = deserialize_certificate(expect);
    CHECK(serialize_certificate(back) == expect);
    CHECK(back.problem.shape == make_shape(2, 1));
    CHECK(back.problem.targets == std::vector<TargetPattern>{TargetPattern::star(1)});
    CHECK(back.coloring.color_of(0) == 0);
    CHECK(back.provenance == "unit");
}

TEST_CASE("certificate round trip on a nontrivial coloring") {
    ColoringProblem prob{make_shape(3, 2),
                         {TargetPattern::stripe(2), TargetPattern::cycle(7)}};
    EdgeTable host(prob.shape);
    EdgeColoring col(host.edge_count(), 2);
    for (int e = 0; e < host.edge_count(); ++e) col.set_color(e, e % 2);
    Certificate cert{prob, col, "round trip"};
    auto text = serialize_certificate(cert);
    auto back = deserialize_certificate(text);
    CHECK(back.coloring == cert.coloring);
    CHECK(back.problem.targets == cert.problem.targets);
    CHECK(serialize_certificate(back) == text);
}

static void expect_field(const std::string& text, const std::string& field) {
    try {
        deserialize_certificate(text);
        FAIL("expected CertError at ", field);
    } catch (const CertError& e) {
        CHECK(e.field() == field);
        CHECK(std::string(e.what()).find("schema error at " + field) == 0);
    }
}

TEST_CASE("deserialization pinpoints schema violations") {
    std::string good = serialize_certificate(tiny_cert());

    expect_field("not json at all", "$");
    expect_field("[1,2,3]", "$");
    expect_field("{}", "format");
    expect_field(R"({"format":"mramsey-cert-v2"})", "format");

    auto patch = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        auto pos = s.find(from);
        REQUIRE(pos != std::string::npos);
        return s.replace(pos, from.size(), to);
    };
    expect_field(patch("\"j\":2", "\"j\":0"), "j");
    expect_field(patch("\"j\":2", "\"j\":\"two\""), "j");
    expect_field(patch("\"colors\":1", "\"colors\":0"), "colors");
    expect_field(patch("\"targets\":[{\"kind\":\"star\",\"param\":1}]", "\"targets\":[]"),
                 "targets");
    expect_field(patch("{\"kind\":\"star\",\"param\":1}", "{\"kind\":\"blob\",\"param\":1}"),
                 "targets[0].kind");
    expect_field(patch("{\"kind\":\"star\",\"param\":1}", "{\"kind\":\"cycle\",\"param\":2}"),
                 "targets[0].param");
    expect_field(patch("{\"kind\":\"star\",\"param\":1}", "7"), "targets[0]");
    expect_field(patch("[[0,1,0]]", "[]"), "edges");
    expect_field(patch("[0,1,0]", "[1,0,0]"), "edges[0]");        // u >= v
    expect_field(patch("[0,1,0]", "[0,5,0]"), "edges[0]");        // out of range
    expect_field(patch("[0,1,0]", "[0,1,3]"), "edges[0]");        // color out of range
    expect_field(patch("[0,1,0]", "[0,1]"), "edges[0]");          // wrong arity
    expect_field(patch("\"provenance\":\"unit\"", "\"provenance\":9"), "provenance");

    // same-part edge and canonical-order violations need a bigger host
    ColoringProblem prob{make_shape(2, 2), {TargetPattern::star(1)}};
    EdgeColoring col(4, 1);
    std::string big = serialize_certificate(Certificate{prob, col, "x"});
    auto patch_big = [&](const std::string& from, const std::string& to) {
        std::string s = big;
        auto pos = s.find(from);
        REQUIRE(pos != std::string::npos);
        return s.replace(pos, from.size(), to);
    };
    // K_{2x2} edges in canonical order: (0,2),(0,3),(1,2),(1,3)
    expect_field(patch_big("[[0,2,0],[0,3,0]", "[[0,3,0],[0,2,0]"), "edges[0]");
    expect_field(patch_big("[0,2,0]", "[0,1,0]"), "edges[0]");  // inside a class

    // files
    auto tmp = std::filesystem::temp_directory_path() / "mramsey-test-cert.json";
    write_certificate_file(tmp, tiny_cert());
    auto rt = read_certificate_file(tmp);
    CHECK(serialize_certificate(rt) == good);
    std::filesystem::remove(tmp);
    CHECK_THROWS(read_certificate_file(tmp));
}
