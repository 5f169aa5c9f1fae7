#include "blockset/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace blockset {

json field_to_json(const Field& f)
{
    json j;
    j["p"] = f.p();
    j["k"] = f.k();
    if (f.k() > 1) j["modulus"] = f.modulus();
    return j;
}

FieldPtr field_from_json(const json& j)
{
    require(j.is_object() && j.contains("p") && j.contains("k"), "field JSON needs p and k");
    require(j["p"].is_number_integer() && j["k"].is_number_integer(), "field p, k must be integers");
    FieldPtr f = make_field(j["p"].get<int>(), j["k"].get<int>());
    if (j.contains("modulus")) {
        auto mod = j["modulus"].get<std::vector<int>>();
        require(mod == f->modulus(),
                "field modulus differs from the canonical one; only canonical moduli are supported");
    }
    return f;
}

json point_set_to_json(const PointSet& s)
{
    json j;
    j["field"] = field_to_json(*s.field);
    json pts = json::array();
    for (const Pt& p : s.pts) pts.push_back({p.x, p.y, p.z});
    j["points"] = pts;
    return j;
}

PointSet point_set_from_json(const json& j)
{
    if (j.is_object() && j.contains("set")) return point_set_from_json(j["set"]);
    require(j.is_object() && j.contains("field") && j.contains("points"),
            "point set JSON needs field and points");
    FieldPtr f = field_from_json(j["field"]);
    require(j["points"].is_array(), "points must be an array");
    std::vector<Pt> pts;
    for (const auto& e : j["points"]) {
        require(e.is_array() && e.size() == 3, "each point must be a triple");
        int x = e[0].get<int>(), y = e[1].get<int>(), z = e[2].get<int>();
        require(x >= 0 && x < f->q() && y >= 0 && y < f->q() && z >= 0 && z < f->q(),
                "point coordinate out of range");
        pts.push_back(normalize_point(*f, x, y, z));
    }
    return PointSet(std::move(f), std::move(pts));
}

json collineation_to_json(const Collineation& c)
{
    json j;
    j["matrix"] = {{c.m[0][0], c.m[0][1], c.m[0][2]},
                   {c.m[1][0], c.m[1][1], c.m[1][2]},
                   {c.m[2][0], c.m[2][1], c.m[2][2]}};
    j["frobenius"] = c.frob;
    return j;
}

Collineation collineation_from_json(const json& j)
{
    require(j.is_object() && j.contains("matrix"), "collineation JSON needs a matrix");
    const auto& m = j["matrix"];
    require(m.is_array() && m.size() == 3, "matrix must be 3x3");
    Collineation c;
    for (int i = 0; i < 3; ++i) {
        require(m[static_cast<std::size_t>(i)].is_array() && m[static_cast<std::size_t>(i)].size() == 3,
                "matrix must be 3x3");
        for (int k = 0; k < 3; ++k)
            c.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<int>();
    }
    c.frob = j.value("frobenius", 0);
    return c;
}

json triple_to_json(const ArrowTriple& t)
{
    json j;
    j["group"] = t.group.orders;
    j["A"] = t.A;
    j["B"] = t.B;
    j["C"] = t.C;
    return j;
}

ArrowTriple triple_from_json(const json& j)
{
    require(j.is_object() && j.contains("group") && j.contains("A") && j.contains("B") &&
                j.contains("C"),
            "triple JSON needs group, A, B, C");
    ArrowTriple t;
    t.group = AbelianGroup(j["group"].get<std::vector<int>>());
    t.A = j["A"].get<ElemSet>();
    t.B = j["B"].get<ElemSet>();
    t.C = j["C"].get<ElemSet>();
    for (ElemSet* s : {&t.A, &t.B, &t.C}) {
        std::sort(s->begin(), s->end());
        for (int g : *s) require(g >= 0 && g < t.group.n, "triple element out of range");
    }
    return t;
}

json blocking_report_to_json(const BlockingReport& r)
{
    json j;
    j["is_blocking"] = r.is_blocking;
    j["is_proper"] = r.is_proper;
    j["is_minimal"] = r.is_minimal;
    if (r.index_exact)
        j["index"] = r.index;
    else
        j["index"] = ">= " + std::to_string(r.index_bound + 1);
    json rl = json::array();
    for (const Ln& l : r.redei_lines) rl.push_back({l.u, l.v, l.w});
    j["redei_lines"] = rl;
    j["size"] = r.size;
    json spec = json::array();
    for (auto [k, c] : r.intersection_spectrum) spec.push_back({k, c});
    j["intersection_spectrum"] = spec;
    return j;
}

json construction_to_json(const ConstructionRecord& r)
{
    json j;
    j["recipe"] = r.recipe;
    j["params"] = r.params;
    j["set"] = point_set_to_json(r.set);
    j["predicted_size"] = r.predicted_size;
    if (r.predicted_directions)
        j["predicted_directions"] = *r.predicted_directions;
    else
        j["predicted_directions"] = nullptr;
    return j;
}

json census_to_json(const CensusReport& r)
{
    json j;
    j["schema"] = "census/1";
    j["q"] = r.q;
    j["size_lo"] = r.size_lo;
    j["size_hi"] = r.size_hi;
    json classes = json::array();
    for (const auto& c : r.classes) {
        json jc;
        jc["canonical"] = point_set_to_json(c.canonical);
        jc["size"] = c.size;
        jc["is_redei"] = c.is_redei;
        jc["configuration"] = c.configuration;
        jc["provenance"] = c.provenance;
        if (!c.reference.empty()) jc["reference"] = c.reference;
        json spec = json::array();
        for (auto [k, n] : c.print.spectrum) spec.push_back({k, n});
        jc["fingerprint"] = {{"size", c.print.size}, {"spectrum", spec}, {"redei", c.print.redei}};
        jc["unclaimed"] = c.unclaimed;
        jc["candidates"] = c.candidates;
        classes.push_back(jc);
    }
    j["classes"] = classes;
    j["totals"] = r.totals;
    return j;
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    require(static_cast<bool>(out), "cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace blockset
