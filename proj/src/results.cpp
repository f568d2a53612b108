#include "evenpair/results.hpp"

#include "evenpair/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace evenpair {

namespace {

    using nlohmann::json;

    json ids_to_json(const std::vector<VertexId>& ids)
    {
        json out = json::array();
        for (VertexId v : ids)
            out.push_back(v + 1);
        return out;
    }

    json ids_to_json(const VertexSet& s) { return ids_to_json(s.ids()); }

    json path_to_json(const Path& p) { return ids_to_json(p.verts); }

    std::vector<VertexId> ids_from_json(const json& j)
    {
        std::vector<VertexId> out;
        for (const auto& v : j)
            out.push_back(v.get<VertexId>() - 1);
        return out;
    }

} // namespace

json witness_to_json(const Witness& w)
{
    json out;
    out["kind"] = to_string(w.kind);
    out["vertices"] = ids_to_json(w.vertices);
    if (w.kind == WitnessKind::Prism) {
        out["triangle_a"] = ids_to_json(std::vector<VertexId>(w.triangle_a.begin(), w.triangle_a.end()));
        out["triangle_b"] = ids_to_json(std::vector<VertexId>(w.triangle_b.begin(), w.triangle_b.end()));
        json paths = json::array();
        for (const Path& p : w.paths)
            paths.push_back(path_to_json(p));
        out["paths"] = paths;
    }
    return out;
}

Witness witness_from_json(const json& j)
{
    Witness w;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "odd_hole")
        w.kind = WitnessKind::OddHole;
    else if (kind == "antihole")
        w.kind = WitnessKind::Antihole;
    else if (kind == "prism")
        w.kind = WitnessKind::Prism;
    else
        throw GraphError("unknown witness kind: " + kind);
    w.vertices = ids_from_json(j.at("vertices"));
    if (w.kind == WitnessKind::Prism) {
        auto ta = ids_from_json(j.at("triangle_a"));
        auto tb = ids_from_json(j.at("triangle_b"));
        if (ta.size() != 3 || tb.size() != 3)
            throw GraphError("prism witness triangles must have three vertices");
        std::copy(ta.begin(), ta.end(), w.triangle_a.begin());
        std::copy(tb.begin(), tb.end(), w.triangle_b.begin());
        const auto& paths = j.at("paths");
        if (paths.size() != 3)
            throw GraphError("prism witness needs three paths");
        for (std::size_t k = 0; k < 3; ++k)
            w.paths[k] = Path(ids_from_json(paths[k]));
    }
    return w;
}

json pair_result_to_json(const EvenPairResult& r)
{
    json out;
    out["pair"] = json::array({r.pair.first + 1, r.pair.second + 1});
    out["case"] = to_string(r.top_case);
    out["recursion_depth"] = r.recursion_depth;
    json levels = json::array();
    for (const LevelRecord& rec : r.levels) {
        json lv;
        lv["level"] = rec.level;
        lv["graph_size"] = rec.graph_size;
        lv["case"] = to_string(rec.kase);
        if (rec.interesting) {
            lv["t"] = ids_to_json(rec.interesting->t);
            lv["c"] = ids_to_json(rec.interesting->c);
            lv["provenance"] = ids_to_json(rec.interesting->provenance);
        }
        if (rec.outer) {
            lv["outer_path"] = path_to_json(rec.outer->z_path);
            lv["a_set"] = ids_to_json(rec.outer->a_set);
            lv["b_set"] = ids_to_json(rec.outer->b_set);
        }
        auto order_json = [](const PrecedenceOrder& ord) {
            json pairs = json::array();
            for (auto [u, v] : ord.pairs)
                pairs.push_back(json::array({u + 1, v + 1}));
            return pairs;
        };
        if (rec.order_a)
            lv["order_a"] = order_json(*rec.order_a);
        if (rec.order_b)
            lv["order_b"] = order_json(*rec.order_b);
        levels.push_back(lv);
    }
    out["levels"] = levels;
    return out;
}

json coloring_to_json(const Coloring& c)
{
    json colors = json::array();
    for (const auto& [v, col] : c.colors)
        colors.push_back(json::array({v + 1, col}));
    json out;
    out["colors"] = colors;
    out["num_colors"] = c.num_colors;
    return out;
}

Coloring coloring_from_json(const json& j)
{
    Coloring c;
    for (const auto& entry : j.at("colors"))
        c.colors[entry.at(0).get<VertexId>() - 1] = entry.at(1).get<int>();
    c.num_colors = j.at("num_colors").get<int>();
    return c;
}

json trace_to_json(const ContractionTrace& t)
{
    json steps = json::array();
    for (const ContractionStep& s : t.steps) {
        json step;
        step["merged"] = json::array({s.merged.first + 1, s.merged.second + 1});
        step["fresh"] = s.fresh + 1;
        step["graph_size_after"] = s.graph_size_after;
        steps.push_back(step);
    }
    json out;
    out["original_n"] = t.original_n;
    out["steps"] = steps;
    out["terminal"] = "disjoint_cliques";
    return out;
}

ContractionTrace trace_from_json(const json& j)
{
    ContractionTrace t;
    t.original_n = j.at("original_n").get<std::size_t>();
    for (const auto& step : j.at("steps")) {
        ContractionStep s;
        s.merged = {step.at("merged").at(0).get<VertexId>() - 1,
            step.at("merged").at(1).get<VertexId>() - 1};
        s.fresh = step.at("fresh").get<VertexId>() - 1;
        s.graph_size_after = step.at("graph_size_after").get<std::size_t>();
        t.steps.push_back(s);
    }
    return t;
}

json snake_to_json(const Snake& s)
{
    json out;
    out["a"] = s.a + 1;
    out["b"] = s.b + 1;
    out["s1"] = path_to_json(s.s1);
    out["s2"] = path_to_json(s.s2);
    out["s3"] = path_to_json(s.s3);
    out["s4"] = path_to_json(s.s4);
    out["proper"] = s.proper();
    return out;
}

json make_envelope(const std::string& command, const std::string& input_digest, json outcome,
    std::optional<double> total_ms)
{
    json out;
    out["schema_version"] = result_schema_version;
    out["command"] = command;
    out["input_digest"] = input_digest;
    out["outcome"] = std::move(outcome);
    if (total_ms)
        out["timings"] = json{{"total_ms", *total_ms}};
    return out;
}

namespace {

    std::string check_vertices_exist(const Graph& g, const std::vector<VertexId>& ids)
    {
        for (VertexId v : ids)
            if (!g.has_vertex(v))
                return "vertex " + std::to_string(v + 1) + " not in the graph";
        return {};
    }

} // namespace

std::string verify_envelope(const Graph& g, const json& envelope, const OracleLimits& limits)
{
    if (!envelope.contains("outcome"))
        return "envelope has no outcome";
    if (envelope.value("schema_version", 0) != result_schema_version)
        return "unsupported schema version";
    std::string digest = graph_digest(g);
    if (envelope.value("input_digest", std::string{}) != digest)
        return "input digest mismatch: graph has " + digest;
    const json& outcome = envelope.at("outcome");
    std::string type = outcome.value("type", std::string{});

    if (type == "classification") {
        bool in_class = outcome.value("in_class", false);
        auto fresh = class_a_witness(g, limits);
        if (in_class != !fresh.has_value())
            return "classification verdict does not match a fresh oracle run";
        if (!in_class) {
            Witness w = witness_from_json(outcome.at("witness"));
            if (auto err = check_vertices_exist(g, w.vertices); !err.empty())
                return err;
            if (!validate_witness(g, w))
                return "witness does not validate against the graph";
        }
        return {};
    }
    if (type == "pair") {
        auto pair = outcome.at("pair");
        VertexId a = pair.at(0).get<VertexId>() - 1;
        VertexId b = pair.at(1).get<VertexId>() - 1;
        if (auto err = check_vertices_exist(g, {a, b}); !err.empty())
            return err;
        if (g.adjacent(a, b))
            return "pair vertices are adjacent";
        if (!is_special_even_pair(g, a, b, limits))
            return "pair fails the special even pair oracle";
        return {};
    }
    if (type == "coloring") {
        Coloring c = coloring_from_json(outcome.at("coloring"));
        ContractionTrace t = trace_from_json(outcome.at("trace"));
        if (t.original_n != g.vertex_count())
            return "trace original size mismatch";
        try {
            replay_trace(g, t);
        } catch (const GraphError& e) {
            return std::string("trace does not replay: ") + e.what();
        }
        if (!verify_coloring(g, c))
            return "coloring is not proper";
        std::set<int> used;
        for (const auto& [v, col] : c.colors)
            used.insert(col);
        if (static_cast<int>(used.size()) != c.num_colors)
            return "num_colors does not match the color map";
        return {};
    }
    if (type == "diagnostic")
        return {}; // nothing re-checkable
    return "unknown outcome type: " + type;
}

} // namespace evenpair
