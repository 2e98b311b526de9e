#pragma once

#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "linklab/constructions.hpp"
#include "linklab/embedding.hpp"
#include "linklab/knots.hpp"
#include "linklab/splice.hpp"

namespace linklab {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Graphs: {"vertices":[{"id":0,"label":"a"?}],"edges":[[0,1]],"marks":{...}?}

inline Json graph_to_json(const Graph& g, std::optional<std::array<int, 3>> marks = {}) {
    Json j;
    j["vertices"] = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        Json jv;
        jv["id"] = v;
        const std::string l = g.label(v);
        if (!l.empty()) jv["label"] = l;
        j["vertices"].push_back(jv);
    }
    j["edges"] = Json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back(Json::array({u, v}));
    if (marks) j["marks"] = Json{{"a", (*marks)[0]}, {"b", (*marks)[1]}, {"c", (*marks)[2]}};
    return j;
}

inline Json graph_to_json(const MarkedGraph& mg) {
    return graph_to_json(mg.graph, std::array<int, 3>{mg.a, mg.b, mg.c});
}

inline Graph graph_from_json(const Json& j, std::array<int, 3>* marks_out = nullptr) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw InvalidArgument("graph json: missing vertices/edges");
    const auto& verts = j.at("vertices");
    Graph g(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i) {
        const auto& jv = verts[i];
        const int id = jv.at("id").get<int>();
        if (id != static_cast<int>(i))
            throw InvalidArgument("graph json: vertex ids must be dense 0..n-1 in order");
        if (jv.contains("label")) g.set_label(id, jv.at("label").get<std::string>());
    }
    for (const auto& je : j.at("edges")) {
        if (!je.is_array() || je.size() != 2) throw InvalidArgument("graph json: bad edge entry");
        g.add_edge(je[0].get<int>(), je[1].get<int>());
    }
    if (marks_out) {
        if (!j.contains("marks")) throw InvalidArgument("graph json: marks required here");
        const auto& m = j.at("marks");
        *marks_out = {m.at("a").get<int>(), m.at("b").get<int>(), m.at("c").get<int>()};
    }
    return g;
}

// ---------------------------------------------------------------------------
// Embeddings

inline Json point_to_json(const Point3& p) {
    return Json::array({format_rational(p.x), format_rational(p.y), format_rational(p.z)});
}

inline Point3 point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw InvalidArgument("embedding json: bad point");
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()),
            parse_rational(j[2].get<std::string>())};
}

inline Json embedding_to_json(const Embedding& e, std::optional<std::array<int, 3>> marks = {}) {
    Json j;
    j["graph"] = graph_to_json(e.graph, marks);
    Json pos;
    for (int v = 0; v < e.graph.vertex_count(); ++v) pos[std::to_string(v)] = point_to_json(e.position[v]);
    j["positions"] = std::move(pos);
    if (!e.subdivisions.empty()) {
        Json subs;
        for (const auto& [key, pts] : e.subdivisions) {
            Json arr = Json::array();
            for (const auto& p : pts) arr.push_back(point_to_json(p));
            subs[std::to_string(key.first) + "-" + std::to_string(key.second)] = std::move(arr);
        }
        j["subdivisions"] = std::move(subs);
    }
    return j;
}

inline Embedding embedding_from_json(const Json& j, std::array<int, 3>* marks_out = nullptr) {
    Embedding e;
    e.graph = graph_from_json(j.at("graph"), marks_out);
    e.position.resize(e.graph.vertex_count());
    const auto& pos = j.at("positions");
    if (static_cast<int>(pos.size()) != e.graph.vertex_count())
        throw InvalidArgument("embedding json: positions must cover every vertex");
    for (const auto& [key, val] : pos.items()) {
        const int v = std::stoi(key);
        if (!e.graph.has_vertex(v)) throw InvalidArgument("embedding json: position for unknown vertex");
        e.position[v] = point_from_json(val);
    }
    if (j.contains("subdivisions")) {
        for (const auto& [key, val] : j.at("subdivisions").items()) {
            const auto dash = key.find('-');
            if (dash == std::string::npos) throw InvalidArgument("embedding json: bad subdivision key");
            const int u = std::stoi(key.substr(0, dash));
            const int v = std::stoi(key.substr(dash + 1));
            if (!e.graph.has_edge(u, v))
                throw InvalidArgument("embedding json: subdivision for missing edge");
            std::vector<Point3> pts;
            for (const auto& jp : val) pts.push_back(point_from_json(jp));
            e.subdivisions[{std::min(u, v), std::max(u, v)}] = std::move(pts);
        }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Certificates: {"verdict":...,"determinant":"3","arf":1,"colorings":{...}?}

inline Json certificate_to_json(const KnotCertificate& c) {
    Json j;
    j["verdict"] = c.knotted() ? "certified-knotted" : "inconclusive";
    j["determinant"] = c.determinant.str();
    j["arf"] = c.arf;
    if (c.coloring_witness) {
        Json w;
        w["prime"] = c.coloring_witness->prime;
        w["arc_colors"] = c.coloring_witness->arc_colors;
        j["coloring_witness"] = std::move(w);
    }
    return j;
}

// ---------------------------------------------------------------------------
// Splice scenes and histories

inline Json polyline_to_json(const Polyline3& pl) {
    Json arr = Json::array();
    for (const auto& p : pl) arr.push_back(point_to_json(p));
    return arr;
}

inline Polyline3 polyline_from_json(const Json& j) {
    Polyline3 pl;
    for (const auto& jp : j) pl.push_back(point_from_json(jp));
    return pl;
}

inline Json scene_to_json(const SpliceScene& s) {
    Json j;
    j["base"] = polyline_to_json(s.base);
    j["cycles"] = Json::array();
    for (const auto& c : s.cycles) {
        Json jc;
        jc["id"] = c.id;
        jc["points"] = polyline_to_json(c.pts);
        jc["lk"] = c.lk.str();
        jc["pairings_used"] = c.pairings_used;
        j["cycles"].push_back(std::move(jc));
    }
    j["next_cycle_id"] = s.next_cycle_id;
    j["clearance_z"] = format_rational(s.clearance_z);
    j["jitter_seed"] = s.jitter_seed;
    return j;
}

inline SpliceScene scene_from_json(const Json& j) {
    SpliceScene s;
    s.base = polyline_from_json(j.at("base"));
    for (const auto& jc : j.at("cycles")) {
        SceneCycle c;
        c.id = jc.at("id").get<int>();
        c.pts = polyline_from_json(jc.at("points"));
        c.lk = BigInt(jc.at("lk").get<std::string>());
        if (jc.contains("pairings_used")) c.pairings_used = jc.at("pairings_used").get<int>();
        s.cycles.push_back(std::move(c));
    }
    s.next_cycle_id = j.value("next_cycle_id", static_cast<int>(s.cycles.size()));
    s.clearance_z = j.contains("clearance_z")
                        ? parse_rational(j.at("clearance_z").get<std::string>())
                        : Rational(0);
    s.jitter_seed = j.value("jitter_seed", std::uint64_t{1});
    // Re-measure when the table is silent; trust it otherwise (reduce
    // re-checks orientations anyway).
    for (auto& c : s.cycles)
        if (c.lk == 0) c.lk = linking_number(c.pts, s.base);
    return s;
}

inline Json splice_history_to_json(const JState& state) {
    Json steps = Json::array();
    for (const auto& r : state.history) {
        Json js;
        js["step"] = r.step;
        js["pair"] = Json::array({r.id1, r.id2});
        js["sizes"] = Json::array({r.size1, r.size2});
        js["lk_pair"] = Json::array({r.lk1.str(), r.lk2.str()});
        Json alk = Json::array();
        for (const auto& v : r.a_lk) alk.push_back(v.str());
        js["a_lk"] = std::move(alk);
        js["outcome"] = r.outcome;
        js["block"] = Json::array({r.block_start, r.block_end});
        js["new_cycle"] = Json{{"id", r.new_id},
                               {"lk", r.new_lk.str()},
                               {"size", r.new_size},
                               {"pairings_used", r.pairings_used}};
        js["j_sum_after"] = r.j_sum_after.str();
        steps.push_back(std::move(js));
    }
    Json j;
    j["n"] = state.n;
    j["expected_sum"] = state.expected_sum.str();
    j["steps"] = std::move(steps);
    return j;
}

inline Json splice_result_to_json(const SpliceResult& r) {
    Json j;
    j["base"] = polyline_to_json(r.base);
    j["component"] = Json{{"id", r.component.id},
                          {"points", polyline_to_json(r.component.pts)},
                          {"pairings_used", r.component.pairings_used}};
    j["lk"] = r.lk.str();
    j["k"] = r.k.str();
    j["early_exit"] = r.early_exit;
    Json sel;
    sel["indices"] = r.selection.indices;
    sel["sum"] = r.selection.sum.str();
    sel["kind"] = r.selection.kind == ZeroSumSelection::Kind::kPrefix ? "prefix" : "window";
    j["selection"] = std::move(sel);
    Json init = Json::array();
    for (const auto& v : r.initial_lks) init.push_back(v.str());
    j["initial_lks"] = std::move(init);
    j["history"] = splice_history_to_json(r.state);
    return j;
}

// ---------------------------------------------------------------------------
// File helpers: newline-terminated, two-space indent, sorted keys (nlohmann
// objects iterate in key order).

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& err) {
        throw InvalidArgument("malformed json in " + path + ": " + err.what());
    }
}

}  // namespace linklab
