#pragma once

// Certificate serialization: JSON with a fixed field order, and a short
// text rendering of the same data.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "tautbraid/oracle.hpp"
#include "tautbraid/pipeline.hpp"

namespace tautbraid {

inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

namespace detail {

inline Json names_of_pairs(const std::vector<std::pair<int, int>>& pairs, bool plus_minus) {
  Json out = Json::array();
  for (auto [a, b] : pairs) {
    if (plus_minus) out.push_back(Json::array({arc_name(a, true), arc_name(b, false)}));
    else out.push_back(Json::array({a + 1, b + 1}));
  }
  return out;
}

inline Json census_json(const IntersectionCensus& c) {
  Json j;
  j["type1"] = c.type1_count;
  j["type2"] = c.type2_count;
  std::vector<std::pair<int, int>> all;
  for (const auto& p : c.points) all.emplace_back(p.plus_letter, p.minus_letter);
  j["points"] = names_of_pairs(all, true);
  return j;
}

}  // namespace detail

inline std::string verdict_string(const Analysis& a) { return a.degenerate ? "degenerate" : a.passed() ? "pass" : "fail"; }

inline Json certificate_json(const Analysis& a) {
  Json j;
  j["tool"] = "tautbraid";
  j["version"] = kToolVersion;
  j["input"] = to_string(a.input);
  j["family"] = a.family == Family::ThreeBraid ? "positive_3_braid" : "one_bridge";
  if (a.params) j["parameters"] = {{"w", a.params->w}, {"b", a.params->b}, {"t", a.params->t}};
  if (a.normal) {
    j["normalized"] = to_string(*a.normal);
    j["normalization_moves"] = a.moves.size();
    j["class"] = to_string(a.classification.cls);
    j["rotation"] = a.classification.rotation;
  }
  j["analyzed_word"] = to_string(a.word);
  j["genus"] = {{"euler_characteristic", a.genus.euler_characteristic},
                {"genus", a.genus.genus},
                {"two_g_minus_one", a.genus.two_g_minus_one}};
  j["degenerate"] = a.degenerate;
  if (a.degenerate) {
    j["verdict"] = verdict_string(a);
    return j;
  }
  j["cusping"] = to_string(a.cusping);
  j["cusping_code"] = to_code(a.cusping);
  j["cusped_count"] = a.cusping.cusped_count();
  j["product_disks"] = a.disks.size();
  Json iso = Json::array();
  for (int l : a.standardized.isotopy_order) iso.push_back(arc_name(l, true));
  j["isotopy_order"] = iso;
  j["census"] = {{"pre", detail::census_json(a.census_pre)}, {"post", detail::census_json(a.census_post)}};

  const auto& D = a.evaluation.sectors;
  Json sectors;
  sectors["disk"] = D.count(SectorKind::Disk);
  sectors["band"] = D.count(SectorKind::Band);
  sectors["polygon"] = D.count(SectorKind::Polygon);
  sectors["product_disk"] = D.count(SectorKind::ProductDisk);
  Json list = Json::array();
  for (std::size_t i = 0; i < D.sectors.size(); ++i) {
    const auto& s = D.sectors[i];
    Json e;
    e["id"] = i;
    e["kind"] = to_string(s.kind);
    if (s.kind == SectorKind::Disk) {
      Json d = Json::array();
      for (int x : s.disks) d.push_back("S_" + std::to_string(x + 1));
      e["disks"] = d;
    }
    if (s.kind == SectorKind::Polygon) {
      e["position"] = to_string(s.position);
      e["home_disk"] = "S_" + std::to_string(s.home_disk + 1);
    }
    if (s.kind == SectorKind::ProductDisk) e["product_disk"] = "D_" + std::to_string(s.product_disk + 1);
    Json bands = Json::array();
    for (int b : s.bands) bands.push_back(b + 1);
    e["bands"] = bands;
    e["euler_characteristic"] = s.euler_characteristic;
    e["outward_arc"] = a.evaluation.sink.witnesses[i];
    list.push_back(e);
  }
  sectors["list"] = list;
  j["sectors"] = sectors;

  Json sink;
  sink["verdict"] = a.evaluation.sink.verdict ? "sink_disk_free" : "sink_disk_found";
  sink["witnesses_complete"] = a.witnesses_complete();
  Json viol = Json::array();
  for (const auto& v : a.evaluation.sink.violations)
    viol.push_back({{"sector", v.sector}, {"reason", v.reason}, {"sector_is_disk", v.sector_is_disk}});
  sink["violations"] = viol;
  j["sink"] = sink;

  j["maximal_endpoints"] = a.evaluation.endpoints.size();
  j["linked_pairs"] = detail::names_of_pairs(a.evaluation.linked, false);
  j["k"] = a.evaluation.k;
  j["expected_k"] = a.expected_k;
  j["slope_interval"] = a.interval ? a.interval->to_string() : "undefined";
  if (a.family == Family::OneBridge) {
    j["gamma"] = a.gamma;
    j["gamma_at_least_genus"] = a.gamma >= a.genus.genus;
  }
  j["switch_system"] = {{"equations", to_string(a.switch_system)}, {"positive_solution", a.switch_positive}};
  j["verdict"] = verdict_string(a);
  return j;
}

inline Json search_json(const SearchReport& r) {
  Json j;
  j["tool"] = "tautbraid";
  j["version"] = kToolVersion;
  Json s;
  s["braid"] = r.braid;
  s["normalized"] = r.normal;
  s["schema"] = r.schema;
  s["examined"] = r.examined;
  s["expected_count"] = r.expected_count;
  s["excluded_letters"] = r.excluded_letters;
  s["sink_free"] = r.sink_free;
  s["nondisk_rejections"] = r.nondisk_rejections;
  s["best_k"] = r.best_k;
  s["best_count"] = r.best_count;
  s["bound"] = r.bound;
  s["schema_k"] = r.schema_k;
  s["schema_sink_free"] = r.schema_sink_free;
  s["schema_among_best"] = schema_among_best(r);
  s["witnesses"] = r.witnesses;
  s["beats_bound"] = r.beats_bound;
  j["search"] = s;
  return j;
}

inline std::string certificate_text(const Analysis& a) {
  std::ostringstream o;
  o << "input:        " << to_string(a.input) << "\n";
  if (a.params) o << "parameters:   K(" << a.params->w << "," << a.params->b << "," << a.params->t << ")\n";
  if (a.normal) o << "normal form:  " << to_string(*a.normal) << "  class " << to_string(a.classification.cls) << "\n";
  o << "genus:        g=" << a.genus.genus << "  chi=" << a.genus.euler_characteristic << "  2g-1=" << a.genus.two_g_minus_one << "\n";
  if (a.degenerate) {
    o << "verdict:      degenerate\n";
    return o.str();
  }
  const auto& D = a.evaluation.sectors;
  o << "cusping:      " << to_string(a.cusping) << "\n";
  o << "disks:        " << a.disks.size() << " product disks, " << a.cusping.cusped_count() << " cusped\n";
  o << "census:       pre " << a.census_pre.type1_count << " type1 / " << a.census_pre.type2_count << " type2, post "
    << a.census_post.type1_count << " / " << a.census_post.type2_count << "\n";
  o << "sectors:      " << D.count(SectorKind::Disk) << " disk, " << D.count(SectorKind::Band) << " band, "
    << D.count(SectorKind::Polygon) << " polygon, " << D.count(SectorKind::ProductDisk) << " product disk\n";
  o << "sink disks:   " << (a.evaluation.sink.verdict ? "none" : std::to_string(a.evaluation.sink.violations.size()) + " flagged") << "\n";
  o << "linked pairs:";
  if (a.evaluation.linked.empty()) o << " none";
  for (auto [x, y] : a.evaluation.linked) o << " (" << x + 1 << "," << y + 1 << ")";
  o << "\n";
  o << "slopes:       " << (a.interval ? a.interval->to_string() : "undefined") << "  (k=" << a.evaluation.k << ", expected " << a.expected_k << ")\n";
  if (a.family == Family::OneBridge) o << "gamma:        " << a.gamma << "\n";
  o << "switch:       " << to_string(a.switch_system) << " positive solution: " << (a.switch_positive ? "yes" : "no") << "\n";
  o << "verdict:      " << verdict_string(a) << "\n";
  return o.str();
}

}  // namespace tautbraid
