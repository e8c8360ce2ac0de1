#pragma once

// JSON forms of regions, graphs and identity reports.

#include "lozenge/bigcount.hpp"
#include "lozenge/condensation.hpp"
#include "lozenge/dual_graph.hpp"
#include "lozenge/lattice_region.hpp"

#include <json.hpp>

#include <string>

namespace lozenge {

using Json = nlohmann::ordered_json;

inline Json to_json(const RegionParams& p) {
  Json j{{"family", family_name(p.family)}, {"x", p.x}, {"y", p.y}, {"z", p.z}, {"k", p.k}};
  if (p.family == Family::DisconnectedBowtie && p.gap != 1) j["gap"] = p.gap;
  return j;
}

inline Json region_to_json(const Region& r) {
  Json j = r.params() ? to_json(*r.params()) : Json{{"family", nullptr}};
  Json cells = Json::array();
  for (const auto& c : r.cells()) cells.push_back({c.row, c.col, c.orient == Orientation::Up ? "U" : "D"});
  j["cells"] = std::move(cells);
  return j;
}

inline Region region_from_json(const Json& j) {
  std::vector<TriCell> cells;
  for (const auto& c : j.at("cells")) {
    const std::string o = c.at(2).get<std::string>();
    if (o != "U" && o != "D") throw std::invalid_argument("cell orientation must be \"U\" or \"D\"");
    cells.push_back({c.at(0).get<int>(), c.at(1).get<int>(), o == "U" ? Orientation::Up : Orientation::Down});
  }
  std::optional<RegionParams> params;
  if (j.contains("family") && !j.at("family").is_null()) {
    auto fam = parse_family(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("unknown family");
    params = RegionParams{*fam, j.at("x").get<int>(), j.at("y").get<int>(), j.at("z").get<int>(),
                          j.value("k", 0), j.value("gap", 1)};
  }
  const std::string label = params ? describe(*params) : std::string("region");
  return Region(std::move(cells), label, params);
}

inline std::string color_name(Color c) {
  switch (c) {
    case Color::Black: return "black";
    case Color::White: return "white";
    case Color::None: break;
  }
  return "none";
}

inline Json graph_to_json(const DualGraph& g) {
  Json vertices = Json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Json jv{{"color", color_name(g.color(v))}};
    jv["partner"] = g.symmetric() ? Json(g.partner(v)) : Json(nullptr);
    vertices.push_back(std::move(jv));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({e.u, e.v, boost::multiprecision::numerator(e.weight).str(),
                     boost::multiprecision::denominator(e.weight).str()});
  }
  Json j{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
  if (g.embedding()) {
    j["outer_face"] = g.embedding()->outer_cycle;
    Json faces = Json::object();
    for (const auto& [name, vs] : g.embedding()->faces) faces[name] = vs;
    j["faces"] = std::move(faces);
  } else {
    j["outer_face"] = nullptr;
    j["faces"] = Json::object();
  }
  return j;
}

inline DualGraph graph_from_json(const Json& j) {
  const auto& vs = j.at("vertices");
  std::vector<Color> colors;
  std::vector<Vertex> partners;
  bool colored = true;
  bool symmetric = true;
  for (const auto& v : vs) {
    const std::string c = v.value("color", "none");
    if (c == "black") colors.push_back(Color::Black);
    else if (c == "white") colors.push_back(Color::White);
    else colored = false;
    if (v.contains("partner") && !v.at("partner").is_null()) partners.push_back(v.at("partner").get<Vertex>());
    else symmetric = false;
  }
  DualGraph g(vs.size(), colored ? colors : std::vector<Color>{});
  for (const auto& e : j.at("edges")) {
    auto num = [](const Json& x) { return x.is_string() ? BigInt(x.get<std::string>()) : BigInt(x.get<long long>()); };
    g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>(), Rational(num(e.at(2)), num(e.at(3))));
  }
  if (symmetric && !vs.empty()) g.set_partners(std::move(partners));
  return g;
}

inline Json report_to_json(const IdentityReport& r) {
  Json j{{"identity", r.identity}};
  j["params"] = r.params ? to_json(*r.params) : Json(nullptr);
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = {to_string(r.rhs[0]), to_string(r.rhs[1]), to_string(r.rhs[2])};
  j["correction"] = to_string(r.correction);
  j["holds"] = r.holds;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace lozenge
