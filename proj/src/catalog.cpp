#include "diamondlab/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <type_traits>

#include "diamondlab/error.hpp"
#include "diamondlab/geometry.hpp"
#include "diamondlab/golay.hpp"
#include "diamondlab/schreier_sims.hpp"

namespace diamondlab {

namespace {

std::vector<Perm> to_perms(std::span<const CellPerm> gens) {
  std::vector<Perm> out;
  for (const auto& g : gens) {
    std::vector<int> images(g.images().begin(), g.images().end());
    out.push_back(Perm::from_images(images));
  }
  return out;
}

Json line_json(const ProjLine& line) {
  Json j = Json::array();
  for (const auto p : line.points) {
    j.push_back(p.mask);
  }
  return j;
}

Json partition_json(const FourPartition& part) {
  Json j = Json::array();
  for (const auto& cls : part) {
    j.push_back(Json(std::vector<int>(cls.begin(), cls.end())));
  }
  return j;
}

template <class Map>
Json histogram_json(const Map& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) {
    if constexpr (std::is_convertible_v<decltype(k), std::string>) {
      j[k] = v;
    } else {
      j[std::to_string(k)] = v;
    }
  }
  return j;
}

// Shared inputs, computed once per run.
struct Workspace {
  const VerifyOptions& options;
  std::optional<GroupSet> group;
  std::optional<std::vector<Pattern>> orbit_patterns;

  const GroupSet& g() {
    if (!group) {
      const auto gens = diamond_generators();
      group = generate_closure(gens, options.cap);
    }
    return *group;
  }
  const std::vector<Pattern>& orbit_of_d() {
    if (!orbit_patterns) {
      const auto gens = diamond_generators();
      orbit_patterns = orbit(make_diamond_figure(), gens, options.cap);
    }
    return *orbit_patterns;
  }
};

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw VerificationError(message);
  }
}

Json group_section(Workspace& ws) {
  const auto& g = ws.g();
  const auto gens = diamond_generators();
  const auto chain = StabilizerChain::build(to_perms(gens), kCells);
  const auto agl = affine_group_order(4);
  std::size_t affine = 0;
  for (const auto& e : g.elements) {
    affine += as_affine(e) ? 1 : 0;
  }
  const auto orbit_size = ws.orbit_of_d().size();

  Json j;
  j["closure_size"] = g.size();
  j["closure_depth"] = g.depth;
  j["schreier_sims_order"] = chain.order();
  j["affine_group_order"] = agl;
  j["affine_elements"] = affine;
  j["equals_affine_group"] = affine == g.size() && g.size() == agl;
  j["orbit_size"] = orbit_size;
  j["stabilizer_order"] = g.size() / orbit_size;

  require(g.size() == 322'560, "closure of the row/column/quadrant generators has " + std::to_string(g.size()) +
                                   " elements, expected 322560");
  require(chain.order() == g.size(), "stabilizer chain order disagrees with the explicit closure");
  require(affine == g.size(), std::to_string(g.size() - affine) + " elements of G are not affine");
  require(agl == g.size(), "|G| differs from |AGL(4,2)|");
  require(orbit_size == 840, "orbit of D has " + std::to_string(orbit_size) + " patterns, expected 840");
  require(g.size() % orbit_size == 0, "orbit size does not divide |G|");
  return j;
}

Json theorem_section(Workspace& ws) {
  const auto& orb = ws.orbit_of_d();
  Json j = theorem_report_json(verify_theorem(orb));
  std::vector<std::string> center_failures;
  for (const auto& p : orb) {
    if (!center_lemma_check(p)) {
      center_failures.push_back(p.encode());
    }
  }
  j["center_lemma"] = {{"checked", orb.size()}, {"failures", center_failures}};
  if (!center_failures.empty()) {
    throw VerificationError("center lemma fails", center_failures);
  }
  require(orb.size() == 840, "orbit of D has " + std::to_string(orb.size()) + " patterns");
  return j;
}

Json geometry_section(Workspace& ws) {
  const auto& orb = ws.orbit_of_d();
  const auto classes = classify(orb);
  std::set<ProjPoint> appearing;
  bool sums_to_zero = true;
  for (const auto& p : orb) {
    const auto s = structure_of(p);
    std::uint8_t sum = 0;
    for (const auto& d : s.diagrams) {
      appearing.insert(d.linear);
      sum ^= d.linear.mask;
    }
    sums_to_zero = sums_to_zero && sum == 0 &&
                   (s.diagrams[0].grid ^ s.diagrams[1].grid) == s.diagrams[2].grid;
  }
  std::vector<ProjLine> keys;
  for (const auto& [line, members] : classes) {
    keys.push_back(line);
  }
  const auto ortho = verify_orthogonality_skewness(keys);

  Json j;
  j["points"] = points().size();
  j["lines"] = lines().size();
  j["classes"] = classes.size();
  j["class_size"] = classes.begin()->second.size();
  j["points_appearing"] = appearing.size();
  j["sums_to_zero"] = sums_to_zero;
  j["orthogonality"] = {{"pairs", ortho.pairs},
                        {"orthogonal", ortho.orthogonal_count},
                        {"skew", ortho.skew_count},
                        {"orthogonal_and_skew", ortho.both},
                        {"violations", 0}};
  require(sums_to_zero, "some pattern's line diagrams do not sum to zero");
  return j;
}

Json ring_section(Workspace& ws) {
  const auto& orb = ws.orbit_of_d();
  std::vector<Gf4Pattern> seeds;
  for (const auto& p : orb) {
    seeds.push_back(Gf4Pattern::from_pattern(p));
  }
  const auto closure = additive_closure(seeds, ws.options.cap);
  const auto affine = affine_patterns();
  std::vector<std::uint32_t> closure_keys;
  std::vector<std::uint32_t> affine_keys;
  for (const auto& p : closure) {
    closure_keys.push_back(p.key());
  }
  for (const auto& p : affine) {
    affine_keys.push_back(p.key());
  }
  const bool equals_affine = closure_keys == affine_keys;
  const bool filter_agrees = std::all_of(closure.begin(), closure.end(), is_affine_pattern);
  const bool orbit_inside = std::all_of(orb.begin(), orb.end(), [&](const Pattern& p) {
    return std::binary_search(closure_keys.begin(), closure_keys.end(), p.key());
  });
  std::vector<std::string> asymmetric;
  for (const auto& p : closure) {
    if (!symmetry_profile(p.to_pattern()).has_symmetry()) {
      asymmetric.push_back(p.to_pattern().encode());
    }
  }

  Json census = Json::array();
  for (const auto def : kCutDefinitions) {
    census.push_back(cut_census_json(cut_census(def)));
  }

  Json j;
  j["closure_size"] = closure.size();
  j["equals_affine_set"] = equals_affine && filter_agrees;
  j["orbit_in_closure"] = orbit_inside;
  j["symmetric_count"] = closure.size() - asymmetric.size();
  j["asymmetric"] = asymmetric;
  j["cut_census"] = census;
  j["unresolved"] = Json::array(
      {"ring product on the 4096-element carrier is not defined here; the 1024-element ideal is checked additively"});

  require(closure.size() == 1024, "additive closure has " + std::to_string(closure.size()) + " elements");
  require(equals_affine && filter_agrees, "additive closure differs from the affine pattern set");
  require(orbit_inside, "orbit is not contained in its additive closure");
  if (!asymmetric.empty()) {
    throw VerificationError("affine patterns without symmetry", asymmetric);
  }
  return j;
}

Json mog_section(Workspace& ws) {
  const auto code = ws.options.golay_matrix ? build_golay(*ws.options.golay_matrix) : build_golay();
  const auto octads = enumerate_octads(code);
  const auto steiner = verify_steiner(octads);
  const auto profile = intersection_profile(octads, mog::brick_mask());
  const auto gens = parse_m24_generators(ws.options.m24_generators ? std::string_view(*ws.options.m24_generators)
                                                                   : embedded_m24_generators());
  const auto m24 = m24_group(gens, octads);
  const auto stab = octad_stabilizer(m24, mog::brick_mask());
  const auto restriction = restrict_to_square(stab.elements, ws.g());
  const auto splits = brick_split_correspondence(octads);
  const bool disjoint_are_hyperplanes = brick_disjoint_square_sets(octads) == hyperplane_sets();

  Json split_list = Json::array();
  for (const auto& s : splits) {
    split_list.push_back({{"half", s.half}, {"other", s.other}, {"line", line_json(s.line)}});
  }

  Json j;
  j["weight_distribution"] = histogram_json(code.weight_distribution);
  j["octads"] = octads.size();
  j["steiner"] = {{"five_sets", steiner.five_sets}, {"coverage_histogram", histogram_json(steiner.coverage_histogram)}};
  j["brick_intersection_profile"] = histogram_json(profile);
  j["m24_order"] = m24.order();
  j["octad_stabilizer_order"] = stab.chain.order();
  j["octad_stabilizer_elements"] = stab.elements.size();
  j["stabilizer_index"] = m24.order() / stab.chain.order();
  j["restriction"] = {{"stabilizer_size", restriction.stabilizer_size},
                      {"restricted_size", restriction.restricted_size},
                      {"kernel_size", restriction.kernel_size},
                      {"faithful", restriction.faithful},
                      {"equals_G", restriction.equals_group}};
  j["split_correspondence"] = {{"splits", splits.size()}, {"bijective", true}, {"map", split_list}};
  j["brick_disjoint_octads_are_hyperplanes"] = disjoint_are_hyperplanes;

  const std::map<int, std::size_t> expected_profile{{0, 30}, {2, 448}, {4, 280}, {8, 1}};
  require(profile == expected_profile, "octad intersection profile against the brick is wrong");
  require(stab.chain.order() == 322'560 && stab.elements.size() == 322'560,
          "octad stabilizer has order " + std::to_string(stab.chain.order()));
  require(m24.order() == 759 * stab.chain.order(), "octad stabilizer index is not 759");
  require(disjoint_are_hyperplanes, "brick-disjoint octads are not the affine hyperplanes");
  return j;
}

}  // namespace

std::string_view verify_target_name(VerifyTarget t) noexcept {
  switch (t) {
    case VerifyTarget::All:
      return "all";
    case VerifyTarget::Theorem:
      return "theorem";
    case VerifyTarget::Group:
      return "group";
    case VerifyTarget::Geometry:
      return "geometry";
    case VerifyTarget::Ring:
      return "ring";
    case VerifyTarget::Mog:
      return "mog";
  }
  return "?";
}

VerifyTarget parse_verify_target(std::string_view name) {
  for (const auto t : {VerifyTarget::All, VerifyTarget::Theorem, VerifyTarget::Group, VerifyTarget::Geometry,
                       VerifyTarget::Ring, VerifyTarget::Mog}) {
    if (verify_target_name(t) == name) {
      return t;
    }
  }
  throw Error("unknown verify target '" + std::string(name) + "'");
}

Json theorem_report_json(const TheoremReport& report) {
  Json j;
  j["total"] = report.total;
  j["ordinary_count"] = report.ordinary_count;
  j["interchange_only_count"] = report.interchange_only_count;
  j["failures"] = report.failures;
  j["census"] = histogram_json(report.census);
  j["interchange_isometries"] = histogram_json(report.interchange_isometries);
  return j;
}

Json cut_census_json(const CutCensus& census) {
  Json j;
  j["definition"] = std::string(cut_definition_name(census.definition));
  j["count"] = census.count;
  j["equals_affine_set"] = census.equals_affine_set;
  j["slice_check"] = {{"scan", census.slice_scan}, {"rank", census.slice_rank}};
  return j;
}

Json verify(VerifyTarget target, const VerifyOptions& options) {
  Workspace ws{options, std::nullopt, std::nullopt};
  const std::vector<std::pair<VerifyTarget, std::function<Json(Workspace&)>>> sections{
      {VerifyTarget::Group, group_section},     {VerifyTarget::Theorem, theorem_section},
      {VerifyTarget::Geometry, geometry_section}, {VerifyTarget::Ring, ring_section},
      {VerifyTarget::Mog, mog_section}};

  Json report;
  report["schema_version"] = kSchemaVersion;
  report["target"] = std::string(verify_target_name(target));
  Json failures = Json::array();
  for (const auto& [section, run] : sections) {
    if (target != VerifyTarget::All && target != section) {
      continue;
    }
    const std::string name(verify_target_name(section));
    try {
      report[name] = run(ws);
    } catch (const VerificationError& e) {
      failures.push_back({{"section", name}, {"message", e.what()}, {"witnesses", e.witnesses()}});
    } catch (const Error& e) {
      failures.push_back({{"section", name}, {"message", e.what()}, {"witnesses", Json::array()}});
    }
  }
  report["failures"] = failures;
  report["passed"] = failures.empty();
  return report;
}

std::map<std::string, std::string> export_catalog(const VerifyOptions& options) {
  std::map<std::string, std::string> files;
  const auto gens = diamond_generators();
  const auto orb = orbit(make_diamond_figure(), gens, options.cap);

  std::vector<std::string> codes;
  for (const auto& p : orb) {
    codes.push_back(p.encode());
  }
  Json orbit_json;
  orbit_json["schema_version"] = kSchemaVersion;
  orbit_json["count"] = codes.size();
  orbit_json["patterns"] = codes;
  files["orbit.json"] = orbit_json.dump(2) + "\n";

  Json records = Json::array();
  std::vector<std::string> dangling;
  for (const auto& [line, members] : classify(orb)) {
    Json pats = Json::array();
    for (const auto& p : members) {
      const auto code = p.encode();
      if (!std::binary_search(codes.begin(), codes.end(), code)) {
        dangling.push_back(code);
      }
      pats.push_back(code);
    }
    records.push_back({{"line", line_json(line)}, {"patterns", pats}, {"four_partition", partition_json(four_partition(line))}});
  }
  if (!dangling.empty()) {
    throw VerificationError("structure catalog references patterns outside the orbit", dangling);
  }
  Json structures;
  structures["schema_version"] = kSchemaVersion;
  structures["structures"] = records;
  files["structures.json"] = structures.dump(2) + "\n";

  const auto report = verify(VerifyTarget::All, options);
  if (!report["passed"].get<bool>()) {
    std::vector<std::string> messages;
    for (const auto& f : report["failures"]) {
      messages.push_back(f["section"].get<std::string>() + ": " + f["message"].get<std::string>());
    }
    throw VerificationError("verification failed; nothing exported", messages);
  }
  for (const auto* section : {"group", "theorem", "geometry", "ring", "mog"}) {
    Json r;
    r["schema_version"] = kSchemaVersion;
    r["report"] = report[section];
    files[std::string("reports/") + section + ".json"] = r.dump(2) + "\n";
  }
  Json ortho;
  ortho["schema_version"] = kSchemaVersion;
  ortho["report"] = report["geometry"]["orthogonality"];
  files["reports/orthogonality.json"] = ortho.dump(2) + "\n";
  return files;
}

}  // namespace diamondlab
