#include "mramsey/cert_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mramsey {

using ordered_json = nlohmann::ordered_json;

static std::string kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::Star: return "star";
        case PatternKind::Path: return "path";
        case PatternKind::Stripe: return "stripe";
        case PatternKind::Cycle: return "cycle";
    }
    return "?";
}

std::string serialize_certificate(const Certificate& cert) {
    const auto& p = cert.problem;
    ordered_json js;
    js["format"] = "mramsey-cert-v1";
    js["j"] = p.shape.parts;
    js["t"] = p.shape.class_size;
    js["colors"] = p.colors();
    js["targets"] = ordered_json::array();
    for (const auto& tg : p.targets)
        js["targets"].push_back({{"kind", kind_name(tg.kind)}, {"param", tg.param}});
    EdgeTable host(p.shape);
    auto edges = ordered_json::array();
    for (int e = 0; e < host.edge_count(); ++e) {
        auto [u, v] = host.endpoints(e);
        edges.push_back({u, v, cert.coloring.color_of(e)});
    }
    js["edges"] = std::move(edges);
    js["provenance"] = cert.provenance;
    return js.dump() + "\n";
}

static TargetPattern target_from_json(const ordered_json& jt, const std::string& where) {
    if (!jt.is_object() || !jt.contains("kind") || !jt.contains("param"))
        throw CertError(where, "expected object with kind and param");
    if (!jt["kind"].is_string() || !jt["param"].is_number_integer())
        throw CertError(where, "kind must be string, param integer");
    std::string k = jt["kind"];
    int param = jt["param"];
    try {
        if (k == "star") return TargetPattern::star(param);
        if (k == "path") return TargetPattern::path(param);
        if (k == "stripe") return TargetPattern::stripe(param);
        if (k == "cycle") return TargetPattern::cycle(param);
    } catch (const DomainError& e) {
        throw CertError(where + ".param", e.what());
    }
    throw CertError(where + ".kind", "unknown pattern kind \"" + k + "\"");
}

Certificate deserialize_certificate(const std::string& text) {
    ordered_json js = ordered_json::parse(text, nullptr, false);
    if (js.is_discarded()) throw CertError("$", "not valid JSON");
    if (!js.is_object()) throw CertError("$", "top level must be an object");

    auto need = [&](const char* key) -> const ordered_json& {
        if (!js.contains(key)) throw CertError(key, "missing required key");
        return js[key];
    };
    if (!need("format").is_string() || js["format"] != "mramsey-cert-v1")
        throw CertError("format", "expected \"mramsey-cert-v1\"");
    if (!need("j").is_number_integer() || !need("t").is_number_integer())
        throw CertError("j", "j and t must be integers");
    int j = js["j"], t = js["t"];
    PartitionShape shape;
    try {
        shape = make_shape(j, t);
    } catch (const DomainError& e) {
        throw CertError("j", e.what());
    }
    if (!need("colors").is_number_integer()) throw CertError("colors", "must be an integer");
    int colors = js["colors"];
    if (colors < 1) throw CertError("colors", "must be >= 1");
    if (!need("targets").is_array()) throw CertError("targets", "must be an array");
    if (static_cast<int>(js["targets"].size()) != colors)
        throw CertError("targets", "length must equal colors");
    std::vector<TargetPattern> targets;
    for (int i = 0; i < colors; ++i)
        targets.push_back(target_from_json(js["targets"][i], "targets[" + std::to_string(i) + "]"));

    EdgeTable host(shape);
    if (!need("edges").is_array()) throw CertError("edges", "must be an array");
    const auto& je = js["edges"];
    if (static_cast<long long>(je.size()) != host.edge_count())
        throw CertError("edges", "expected " + std::to_string(host.edge_count()) +
                                     " edges, got " + std::to_string(je.size()));
    EdgeColoring coloring(host.edge_count(), colors);
    for (int i = 0; i < host.edge_count(); ++i) {
        std::string where = "edges[" + std::to_string(i) + "]";
        const auto& row = je[i];
        if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
            !row[1].is_number_integer() || !row[2].is_number_integer())
            throw CertError(where, "expected [u, v, color]");
        int u = row[0], v = row[1], c = row[2];
        if (u >= v) throw CertError(where, "endpoints must satisfy u < v");
        if (u < 0 || v >= host.vertex_count()) throw CertError(where, "vertex out of range");
        if (shape.part_of(u) == shape.part_of(v))
            throw CertError(where, "edge inside a partition class");
        auto expect = host.endpoints(i);
        if (expect.u != u || expect.v != v)
            throw CertError(where, "edge out of canonical order: expected (" +
                                       std::to_string(expect.u) + "," + std::to_string(expect.v) +
                                       "), got (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (c < 0 || c >= colors) throw CertError(where, "color out of range");
        coloring.set_color(i, c);
    }
    if (!need("provenance").is_string()) throw CertError("provenance", "must be a string");

    return Certificate{ColoringProblem{shape, std::move(targets)}, std::move(coloring),
                       js["provenance"]};
}

void write_certificate_file(const std::filesystem::path& path, const Certificate& cert) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << serialize_certificate(cert);
}

Certificate read_certificate_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return deserialize_certificate(ss.str());
}

}  // namespace mramsey
