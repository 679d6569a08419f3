#pragma once

// End-to-end analysis: normalize, build the fiber surface, pick and
// standardize product disks, cusp them, decompose into sectors, check for
// sink disks, and count unlinked maximal arcs.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautbraid/branched.hpp"
#include "tautbraid/braid.hpp"
#include "tautbraid/normal_form.hpp"
#include "tautbraid/surface.hpp"
#include "tautbraid/switch_system.hpp"
#include "tautbraid/train_track.hpp"

namespace tautbraid {

/// Everything computed from one cusp assignment on a standardized surface.
struct Evaluation {
  std::vector<CuspedArc> arcs;
  SectorDecomposition sectors;
  SinkReport sink;
  std::vector<BoundarySector> endpoints;
  std::vector<std::pair<int, int>> linked;  ///< letter pairs (0-based)
  int k = 0;
};

inline Evaluation evaluate_assignment(const FiberSurface& f, const std::vector<ProductDiskArc>& standardized,
                                      const CuspAssignment& assignment) {
  if (static_cast<int>(assignment.letters.size()) != f.band_count())
    throw Error(ErrorKind::Range, "cusp assignment length differs from the letter count");
  Evaluation e;
  e.arcs = propagate_cusps(assignment, standardized);
  e.sectors = sector_decomposition(f, e.arcs);
  e.sink = sink_disk_check(e.sectors, e.arcs);
  e.endpoints = maximal_endpoints(f, e.arcs);
  for (auto [i, j] : linked_pairs(e.endpoints))
    e.linked.emplace_back(e.endpoints[static_cast<std::size_t>(i)].letter, e.endpoints[static_cast<std::size_t>(j)].letter);
  e.k = max_unlinked(e.endpoints);
  return e;
}

enum class SchemaChoice { Auto, TypeA, TypeB, TypeC };

enum class Family { ThreeBraid, OneBridge };

struct Analysis {
  Family family = Family::ThreeBraid;
  BraidWord input;
  BraidWord word;  ///< the word the surface is built on
  std::optional<NormalizedThreeBraid> normal;
  std::vector<Move> moves;
  Classification classification;
  std::optional<OneBridgeBraid> params;
  GenusData genus;
  bool degenerate = false;

  FiberSurface surface;
  std::vector<ProductDiskArc> disks;  ///< before standardization
  Standardization standardized;
  IntersectionCensus census_pre;
  IntersectionCensus census_post;
  CuspAssignment cusping;
  Evaluation evaluation;

  int expected_k = 0;    ///< 2g-1 for 3-braids, gamma for 1-bridge braids
  int gamma = -1;        ///< 1-bridge only
  SwitchSystem switch_system;
  bool switch_positive = false;
  std::optional<SlopeInterval> interval;

  bool witnesses_complete() const {
    for (std::size_t i = 0; i < evaluation.sectors.sectors.size(); ++i)
      if (evaluation.sectors.sectors[i].kind != SectorKind::ProductDisk && evaluation.sink.witnesses[i].empty())
        return false;
    return true;
  }
  bool passed() const {
    if (degenerate) return true;
    return evaluation.sink.verdict && witnesses_complete() && evaluation.k == expected_k && !switch_positive;
  }
};

namespace detail {

inline void run_surface_stages(Analysis& a) {
  a.surface = build_fiber_surface(a.word);
  a.disks = product_disks(a.surface);
  a.census_pre = intersection_census(a.surface, a.disks, Stage::Pre);
  a.standardized = standardize(a.surface, a.disks);
  a.census_post = intersection_census(a.surface, a.standardized.disks, Stage::Post);
  a.evaluation = evaluate_assignment(a.surface, a.standardized.disks, a.cusping);
  a.switch_positive = positive_solution_exists(a.switch_system);
  if (!a.evaluation.arcs.empty()) a.interval = slope_interval(a.evaluation.endpoints, a.evaluation.k);
}

inline Classification force_schema(const NormalizedThreeBraid& n, SchemaChoice choice) {
  using K = NormalizedThreeBraid::Kind;
  Classification c = classify(n);
  if (choice == SchemaChoice::Auto || n.kind != K::Blocks) return c;
  const auto& B = n.blocks;
  switch (choice) {
    case SchemaChoice::TypeA:
      if (B.size() != 1 || B[0].b < 2) throw Error(ErrorKind::Range, "the TypeA schema needs one block with b >= 2");
      return {BraidClass::TypeA, 0};
    case SchemaChoice::TypeB:
      if (B.size() != 2) throw Error(ErrorKind::Range, "the TypeB schema needs two blocks");
      return {BraidClass::TypeB, 0};
    case SchemaChoice::TypeC:
      if (B.size() < 2) throw Error(ErrorKind::Range, "the TypeC schema needs at least two blocks");
      return {BraidClass::TypeC, typec_rotation(B)};
    case SchemaChoice::Auto:
      break;
  }
  return c;
}

}  // namespace detail

inline Analysis analyze_3braid(const BraidWord& input, SchemaChoice choice = SchemaChoice::Auto,
                               const NormalizationOptions& opts = {}) {
  Analysis a;
  a.input = input;
  NormalizationResult nr = normalize_search(input, opts);
  a.normal = nr.normal;
  a.moves = nr.moves;
  a.classification = detail::force_schema(nr.normal, choice);
  if (a.classification.cls == BraidClass::Unknot) {
    a.degenerate = true;
    a.genus = genus_3braid(nr.normal);
    a.word = nr.normal.word();
    return a;
  }
  a.genus = genus_3braid(nr.normal);
  a.expected_k = a.genus.two_g_minus_one;
  if (a.classification.cls == BraidClass::ReducedTorus) {
    a.word = nr.normal.word();
  } else {
    a.word = NormalizedThreeBraid::from_blocks(rotate_blocks(nr.normal.blocks, a.classification.rotation)).word();
  }
  a.cusping = schema_cusping(a.classification, nr.normal);
  a.switch_system = local_switch_system(a.classification.cls);
  detail::run_surface_stages(a);
  return a;
}

inline Analysis analyze_1bridge(const OneBridgeBraid& p) {
  Analysis a;
  a.family = Family::OneBridge;
  a.params = p;
  a.input = braid_of_1bridge(p);
  a.word = a.input;
  if (!closure_is_knot(a.word))
    throw Error(ErrorKind::NotKnot, "closure has " + std::to_string(closure_component_count(a.word)) + " components");
  a.genus = genus_1bridge(p);
  a.gamma = gamma_count(p);
  a.expected_k = a.gamma;
  a.cusping = schema_cusping_1bridge(p);
  a.switch_system = local_switch_system(SwitchModel::OneBridge);
  detail::run_surface_stages(a);
  return a;
}

}  // namespace tautbraid
