// JSON serialization: polytopes, bound reports and isogeny reports.
// All numbers are emitted as strings so that values stay exact; key order
// is fixed for byte-reproducible output.

#ifndef DIFFVOL_JSON_IO_HPP
#define DIFFVOL_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "applications.hpp"
#include "bounds.hpp"
#include "parse.hpp"

namespace diffvol {

using Json = nlohmann::ordered_json;

inline std::string rat_string(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    return c.get_str();
}

inline Json polytope_to_json(const LatticePolytope& p) {
    Json j;
    j["dim"] = p.ambient_dim();
    Json pts = Json::array();
    for (const auto& g : p.generators()) {
        Json row = Json::array();
        for (const Int& c : g) row.push_back(c.get_str());
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    Json vtx = Json::array();
    for (const auto& v : p.vertices()) {
        Json row = Json::array();
        for (const Int& c : v) row.push_back(c.get_str());
        vtx.push_back(std::move(row));
    }
    j["vertices"] = std::move(vtx);
    return j;
}

inline Int json_int(const Json& v) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Int(v.get<std::string>());
    throw std::invalid_argument("json: expected integer or integer string");
}

inline LatticePolytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim"))
        throw std::invalid_argument("polytope json: missing \"dim\"");
    int dim = static_cast<int>(json_int(j.at("dim")).get_si());
    const Json& pts = j.contains("points") ? j.at("points") : j.at("vertices");
    std::vector<LatticePoint> points;
    for (const Json& row : pts) {
        LatticePoint p;
        for (const Json& c : row) p.push_back(json_int(c));
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("polytope json: point length != dim");
        points.push_back(std::move(p));
    }
    if (points.empty()) throw std::invalid_argument("polytope json: no points");
    return LatticePolytope(dim, std::move(points));
}

inline Json config_to_json(const BoundConfig& c) {
    Json j;
    j["gamma_variant"] = to_string(c.gamma_variant);
    j["e_variant"] = to_string(c.e_variant);
    return j;
}

inline Json report_to_json(const BoundReport& r) {
    Json j;
    j["statement"] = r.statement;
    j["config"] = config_to_json(r.config);
    j["s"] = r.s;
    j["k"] = r.k;
    Json consts;
    consts["C"] = r.c_value ? Json(r.c_value->get_str()) : Json(nullptr);
    consts["E"] = r.e_value ? Json(r.e_value->get_str()) : Json(nullptr);
    j["constants"] = std::move(consts);
    j["gamma"] = r.gamma ? polytope_to_json(*r.gamma) : Json(nullptr);
    j["terms"] = r.terms;
    if (!r.dilation_trace.empty()) {
        Json trace = Json::array();
        for (const auto& p : r.dilation_trace) trace.push_back(polytope_to_json(p));
        j["dilation_trace"] = std::move(trace);
    }
    j["bound"] = rat_string(r.bound);
    if (r.summed_bound) j["summed_bound"] = rat_string(*r.summed_bound);
    j["hp_comparison"] = r.hp_comparison ? Json(r.hp_comparison->get_str()) : Json(nullptr);
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline Json isogeny_report_to_json(const IsogenyReport& r) {
    Json j;
    j["statement"] = "isogeny";
    j["variant"] = to_string(r.variant);
    Json polys = Json::array();
    for (const auto& p : r.system.polys) polys.push_back(to_text(p));
    j["polynomials"] = std::move(polys);
    Json newts = Json::array();
    for (const auto& p : r.newton) newts.push_back(polytope_to_json(p));
    j["newton_polytopes"] = std::move(newts);
    j["gamma"] = polytope_to_json(r.gamma);
    j["envelope_multiple"] = r.envelope_multiple.get_str();
    j["engine_value"] = r.engine_value.get_str();
    j["chain_reference"] = r.chain_reference.get_str();
    j["stated_reference"] = r.stated_reference.get_str();
    j["discrepancy"] = r.discrepancy;
    if (r.exact_gamma_value) j["exact_gamma_value"] = r.exact_gamma_value->get_str();
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

}  // namespace diffvol

#endif
