#include "burniat/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "burniat/degenerations.hpp"
#include "burniat/fan_io.hpp"
#include "burniat/groups.hpp"
#include "burniat/lattice.hpp"
#include "burniat/toric_setup.hpp"

#ifndef BURNIAT_VERSION
#define BURNIAT_VERSION "0.0.0"
#endif

namespace burniat {

using nlohmann::json;

std::string library_version() { return BURNIAT_VERSION; }

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Recorded: return "recorded";
  }
  return "?";
}

namespace {

json to_json(const LatticeVector& v) { return v.coords(); }

json to_json(const Sublattice& s) {
  json b = json::array();
  for (const auto& v : s.basis()) b.push_back(to_json(v));
  return b;
}

json to_json(const TypedRay& r) { return {{"ray", to_json(r.vector)}, {"type", std::string(1, ray_type_char(r.type))}}; }

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).coords());
  return rows;
}

template <class Map>
json map_json(const Map& m) {
  json o = json::object();
  for (const auto& [k, v] : m) o[k] = v;
  return o;
}

json sorted_vectors(std::vector<LatticeVector> vs) {
  std::sort(vs.begin(), vs.end());
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

class Checks {
 public:
  explicit Checks(std::string prefix) : prefix_(std::move(prefix)) {}

  void compare(const std::string& id, const std::string& description, const json& computed, const json& expected) {
    add(id, description, computed == expected ? CheckStatus::Pass : CheckStatus::Fail, computed, expected, "computed");
  }
  void require(const std::string& id, const std::string& description, bool ok, const json& detail = nullptr) {
    add(id, description, ok ? CheckStatus::Pass : CheckStatus::Fail, detail.is_null() ? json(ok) : detail,
        detail.is_null() ? json(true) : detail, "computed");
    if (!ok && !detail.is_null()) checks_.back().expected = "\"condition holds\"";
  }
  void record(const std::string& id, const std::string& description, const json& value) {
    add(id, description, CheckStatus::Recorded, value, value, "recorded");
  }
  void error(const std::string& id, const std::string& what) {
    add(id, "pipeline raised an error", CheckStatus::Fail, json(what), json("no error"), "computed");
  }

  void add_raw(const std::string& id, const std::string& description, CheckStatus s, const json& computed,
               const json& expected) {
    add(id, description, s, computed, expected, "computed");
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  void add(const std::string& id, const std::string& description, CheckStatus s, const json& computed,
           const json& expected, const std::string& source) {
    checks_.push_back({prefix_ + id, description, s, computed.dump(), expected.dump(), source});
  }

  std::string prefix_;
  std::vector<CheckResult> checks_;
};

// Matrix of g on `sub` in its Hermite basis.
IntMatrix action_in_basis(const GroupElement& g, const Sublattice& sub) {
  std::vector<LatticeVector> cols;
  for (const auto& b : sub.basis()) cols.emplace_back(sub.coordinates(g.matrix_n6() * b));
  return IntMatrix::from_columns(cols, sub.rank());
}

bool is_signed_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int x = m(i, j);
      if (i == j ? (x != 1 && x != -1) : x != 0) return false;
    }
  return true;
}

void group_checks(Checks& c, CaseId id, const CaseSpec& spec) {
  const auto& ex = spec.expected;
  CaseGroup g = relabeling_group(id);
  c.compare("group.order", "order of the relabeling group", g.group.order(), ex.group_order);
  c.compare("group.structure", "isomorphism type of the relabeling group", identify_small_group(g.group),
            ex.group_label);
  c.compare("group.kernel_order", "order of the kernel on the case lattice", g.kernel.order(), ex.kernel_order);
  c.compare("group.faithful_quotient_order", "order of the faithfully acting quotient", g.faithful_quotient_order,
            ex.faithful_quotient_order);

  switch (id) {
    case CaseId::Deg3: {
      c.compare("group.kernel_structure", "the kernel is the colour-cycling C3", identify_small_group(g.kernel),
                std::string("C3"));
      c.require("group.kernel_is_color_cycle", "kernel generated by the colour cycle",
                g.kernel == PermGroup({color_cycle()}));
      break;
    }
    case CaseId::Deg4a: {
      GroupElement sigma(Permutation::from_cycles(
          {{"R0", "R1"}, {"R3", "R2"}, {"G0", "B1"}, {"G3", "B2"}, {"B0", "G1"}, {"B3", "G2"}}));
      PermGroup extended = extend_group(g.group, sigma);
      PermGroup z = center(extended);
      GroupElement inv = interior_swap(Color::R) * interior_swap(Color::G) * interior_swap(Color::B) * cremona();
      c.compare("group.extended_order", "order of the group extended by sigma", extended.order(), 24);
      c.compare("group.center_order", "order of the center of the extended group", z.order(), 2);
      c.compare("group.center_generator", "center generated by s_r s_g s_b Cr",
                z == PermGroup({inv}) ? inv.perm().cycle_string() : std::string("other"),
                inv.perm().cycle_string());
      c.require("group.kernel_equals_center", "kernel on the case lattice equals that center", g.kernel == z);
      break;
    }
    case CaseId::Deg4b: {
      std::set<IntMatrix, bool (*)(const IntMatrix&, const IntMatrix&)> mats(
          [](const IntMatrix& a, const IntMatrix& b) { return a.to_string() < b.to_string(); });
      bool diag = true;
      for (const auto& e : g.group.elements()) {
        IntMatrix m = action_in_basis(e, spec.sublattice);
        diag = diag && is_signed_diagonal(m);
        mats.insert(m);
      }
      c.require("group.acts_diagonally", "every element acts as diag(+-1, +-1)", diag);
      c.compare("group.distinct_actions", "number of distinct actions on the case lattice", mats.size(), 4);
      break;
    }
    case CaseId::Deg5: {
      PermGroup stab = setwise_lattice_stabilizer(gamma6(), spec.sublattice);
      c.require("group.setwise_stabilizer", "relabeling group equals the setwise stabilizer of the lattice",
                stab == g.group);
      break;
    }
  }
}

void fan_checks(Checks& c, CaseId id, const CaseSpec& spec, const Fan& fan) {
  const auto& ex = spec.expected;
  std::vector<TypedRay> rays;
  bool no_a = true;
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    rays.push_back({fan.rays()[i], fan.ray_types()[i]});
    no_a = no_a && fan.ray_types()[i] != RayType::A && classify_ray(fan.rays()[i]) == fan.ray_types()[i];
  }
  std::sort(rays.begin(), rays.end());
  json got = json::array(), want = json::array();
  for (const auto& r : rays) got.push_back(to_json(r));
  for (const auto& r : ex.rays) want.push_back(to_json(r));
  c.compare("rays.count", std::to_string(ex.rays.size()) + " rays", rays.size(), ex.rays.size());
  c.compare("rays.generators", "ray generators and types", got, want);
  c.require("rays.no_type_a", "no ray of type A; types agree with classification", no_a);

  std::map<std::string, std::size_t> by_type, want_by_type;
  for (const auto& r : rays) ++by_type[std::string(1, ray_type_char(r.type))];
  for (const auto& r : ex.rays) ++want_by_type[std::string(1, ray_type_char(r.type))];
  c.compare("rays.by_type", "ray count per type", map_json(by_type), map_json(want_by_type));

  FanValidation v = validate_fan(fan);
  c.require("fan.valid", "cones meet along common faces", v.valid, v.valid ? json(nullptr) : json(v.reason));

  std::set<Int> dets;
  for (const auto& cone : fan.max_cones()) dets.insert(determinant(fan.cone_matrix(cone)));
  json det_json = json::array();
  for (Int d : dets) det_json.push_back(d);
  bool unimodular = std::all_of(dets.begin(), dets.end(), [](Int d) { return d == 1 || d == -1; });
  c.require("fan.smooth", "every maximal cone has determinant +-1 in lattice coordinates",
            unimodular && is_smooth_fan(fan), det_json);

  CompletenessReport cr = completeness_report(fan);
  c.require("fan.complete", "cones cover the whole space", cr.complete);
  std::size_t expected_cones = 0;
  for (const auto& [k, n] : ex.census) expected_cones += n;
  c.compare("fan.max_cones", std::to_string(expected_cones) + " maximal cones", fan.max_cones().size(),
            expected_cones);
  c.compare("fan.census", "maximal cones by ray types", map_json(cone_type_census(fan)), map_json(ex.census));

  switch (spec.sublattice.rank()) {
    case 1: {
      std::vector<LatticeVector> coords;
      for (std::size_t i = 0; i < fan.rays().size(); ++i) coords.push_back(fan.ray_coordinates(i));
      c.compare("fan.target", "fan of " + target_fan_name(ex.target), sorted_vectors(coords),
                sorted_vectors(projective_line_fan().rays()));
      break;
    }
    case 2: {
      auto m = fan_isomorphic_2d(fan, target_fan(ex.target));
      c.require("fan.target", "isomorphic to the " + target_fan_name(ex.target) + " fan", m.has_value(),
                m ? to_json(*m) : json(nullptr));
      break;
    }
    case 3: {
      auto restricted = restrict_rays(fan6_rays(), spec.sublattice);
      std::vector<LatticeVector> rv;
      for (const auto& r : restricted) rv.push_back(r.vector);
      std::vector<Cone> seeds;
      for (const auto& gens : deg5_seed_cones()) {
        std::vector<std::size_t> idx;
        for (const auto& g : gens)
          idx.push_back(static_cast<std::size_t>(std::find(rv.begin(), rv.end(), g) - rv.begin()));
        seeds.emplace_back(std::move(idx));
      }
      auto closure = equivariant_closure(spec.sublattice, rv, seeds, relabeling_group(id).group);
      c.compare("fan.seed_closure", "cones in the group orbits of the seed cones", closure.size(),
                ex.seed_closure_cones);
      c.compare("fan.euler", "vertices - edges + faces on the sphere",
                json{{"V", cr.vertices}, {"E", cr.ridges}, {"F", cr.facets}, {"chi", cr.euler}},
                json{{"V", ex.rays.size()}, {"E", 48}, {"F", expected_cones}, {"chi", 2}});
      break;
    }
    default: break;
  }
}

void fcurve_checks(Checks& c, CaseId id, const CaseSpec& spec) {
  FCurveSplit split = f_curves_in_case(id);
  std::vector<LatticeVector> want;
  if (id == CaseId::Deg4b) want = {{1, -1, 0, 0}};
  if (id == CaseId::Deg5) want = {{1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}};
  c.compare("fcurves.count", "F-curves lying in the case lattice", split.inside.size(), spec.expected.fcurve_count);
  c.compare("fcurves.inside", "F-curve cocharacters in the case lattice", sorted_vectors(split.inside),
            sorted_vectors(want));
  c.compare("fcurves.transversal", "remaining F-curves leave the rational span",
            json{{"transversal", split.transversal.size()}, {"other", split.other.size()}},
            json{{"transversal", 6 - spec.expected.fcurve_count}, {"other", 0}});
}

void boundary_checks(Checks& c, CaseId id, const CaseSpec& spec) {
  BoundaryReport b = boundary_divisors(id);
  std::set<std::string> toric;
  for (const auto& [k, n] : b.computed) toric.insert(k);
  for (const auto& [k, n] : spec.expected.boundary)
    if (!spec.nontoric_divisors.contains(k)) toric.insert(k);
  for (const auto& k : toric) {
    auto got = b.computed.contains(k) ? b.computed.at(k) : 0;
    auto want = spec.expected.boundary.contains(k) ? spec.expected.boundary.at(k) : 0;
    c.compare("boundary.toric." + k, "type " + k + " divisors (ray orbits)", got, want);
  }
  for (const auto& [k, n] : b.recorded) c.record("boundary.nontoric." + k, "type " + k + " divisors", n);
  for (const auto& [k, n] : b.points) c.record("boundary.point." + k, "type " + k + " contracted to points", n);
  if (!b.excluded.empty()) c.record("boundary.excluded", "divisor types over canonical surfaces", b.excluded);
  c.compare("boundary.total", "boundary divisors in total", b.total, spec.expected.boundary_total);
}

void run_case(Checks& c, CaseId id, std::optional<Fan>& fan_out) {
  CaseSpec spec = case_spec(id);
  c.compare("sublattice.rank", "rank of the case lattice", spec.sublattice.rank(), spec.expected.rank);
  c.compare("sublattice.closed_form", "lattice from conditions equals the closed form", to_json(spec.sublattice),
            to_json(spec.closed_form));
  Fan fan = build_case_fan(id);
  fan_out = fan;
  fan_checks(c, id, spec, fan);
  group_checks(c, id, spec);
  fcurve_checks(c, id, spec);
  boundary_checks(c, id, spec);
  c.compare("degenerations.generic_component", "component over the open stratum",
            derive_generic_component(id).label(), spec.expected.generic_component);
}

void tally(VerifyReport& r, const CaseReport& cr) {
  for (const auto& ch : cr.checks) {
    switch (ch.status) {
      case CheckStatus::Pass: ++r.pass; break;
      case CheckStatus::Fail: ++r.fail; break;
      case CheckStatus::Recorded: ++r.recorded; break;
    }
  }
}

json check_json(const CheckResult& ch) {
  return {{"id", ch.id},
          {"description", ch.description},
          {"status", status_name(ch.status)},
          {"computed", json::parse(ch.computed)},
          {"expected", json::parse(ch.expected)},
          {"source", ch.source}};
}

json case_json(const CaseReport& cr) {
  json checks = json::array();
  for (const auto& ch : cr.checks) checks.push_back(check_json(ch));
  json o = {{"case", cr.name}, {"checks", checks}};
  if (cr.fan) o["fan"] = json::parse(fan_to_json(*cr.fan));
  return o;
}

std::string md_cell(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else out += ch;
  }
  return out;
}

void md_case(std::ostringstream& os, const CaseReport& cr) {
  os << "## " << (cr.name == "global" ? std::string("global") : "case " + cr.name) << "\n\n";
  os << "| status | check | description | computed | expected |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& ch : cr.checks) {
    std::string status = ch.status == CheckStatus::Recorded ? "\u25C7 recorded" : status_name(ch.status);
    os << "| " << status << " | " << md_cell(ch.id) << " | " << md_cell(ch.description) << " | "
       << md_cell(ch.computed) << " | " << md_cell(ch.expected) << " |\n";
  }
  if (cr.fan) os << "\nfan: " << cr.fan->rays().size() << " rays, " << cr.fan->max_cones().size() << " maximal cones\n";
  os << "\n";
}

}  // namespace

CaseReport verify_global(const std::optional<std::string>& tables_json, std::vector<std::string>* notes) {
  Checks c("global.");
  try {
    ImageAndKernel ik = image_and_kernel(quotient_map());
    c.compare("lattice.kernel", "kernel of N_Y -> N_6 equals N_Sigma", to_json(ik.kernel), to_json(lattice_n_sigma()));
    c.compare("lattice.image", "image of N_Y -> N_6 is the even-sum lattice", to_json(ik.image), to_json(lattice_n6()));
    c.compare("lattice.image_index", "index of the image in Z^4", ik.image.index(), 2);

    PermGroup g6 = gamma6();
    c.compare("group.gamma6_order", "order of the relabeling group in degree 6", g6.order(), 48);
    c.compare("group.gamma6_structure", "isomorphism type of the degree-6 relabeling group",
              identify_small_group(g6), std::string("C2xC2xA4"));
    std::set<std::string> n6_actions;
    bool hom = true;
    for (const auto& a : g6.elements()) {
      n6_actions.insert(a.matrix_n6().to_string());
      for (const auto& b : g6.elements()) {
        GroupElement ab(a.perm() * b.perm());
        hom = hom && ab.matrix_n6() == a.matrix_n6() * b.matrix_n6() && ab.matrix_ny() == a.matrix_ny() * b.matrix_ny();
      }
    }
    c.require("group.homomorphism", "lattice actions are homomorphisms on all pairs", hom);
    c.compare("group.faithful_on_n6", "distinct actions on N_6", n6_actions.size(), 48);
    bool equivariant = true;
    IntMatrix q = quotient_matrix();
    for (const auto& a : g6.elements()) equivariant = equivariant && q * a.matrix_ny() == a.matrix_n6() * q;
    c.require("group.equivariant_quotient", "N_Y -> N_6 commutes with the actions", equivariant);

    std::map<std::string, std::size_t> sizes;
    for (RayType t : {RayType::A, RayType::B, RayType::C, RayType::D})
      sizes[std::string(1, ray_type_char(t))] = orbit_vectors(g6, basic_ray(t)).size();
    c.compare("rays.orbit_sizes", "orbit sizes of the basic rays", map_json(sizes),
              json{{"A", 2}, {"B", 12}, {"C", 16}, {"D", 12}});
    c.compare("rays.total", "42 rays in degree 6", fan6_rays().size(), 42);

    auto fc = f_curve_cocharacters();
    c.compare("fcurves.cocharacters", "the six F-curve cocharacters",
              sorted_vectors({fc.begin(), fc.end()}),
              sorted_vectors({{1, 1, 0, 0}, {1, -1, 0, 0}, {1, 0, 1, 0}, {1, 0, -1, 0}, {1, 0, 0, 1}, {1, 0, 0, -1}}));
  } catch (const LatticeError& e) {
    c.error("lattice.pipeline", e.what());
  } catch (const GroupError& e) {
    c.error("group.pipeline", e.what());
  } catch (const FanError& e) {
    c.error("rays.pipeline", e.what());
  }

  std::vector<int> vols;
  for (int f = 0; f <= 9; ++f) vols.push_back(base_volume(f));
  c.compare("degenerations.base_volumes", "volumes of #0..#9", vols, std::vector<int>{6, 2, 2, 3, 1, 2, 4, 5, 1, 3});
  ComponentType two = base_component(2), eight = base_component(8);
  c.compare("degenerations.identification", "#2 after one blowup is #4(1)", child(two, 1).label(), std::string("#4(1)"));
  ComponentType e1 = child(eight, 1), e2 = child(eight, 2);
  c.compare("degenerations.contract_to_curve", "#8 after one blowup", json{e1.label(), marker_name(e1.marker)},
            json{"#8_1(0)", "contract-to-curve"});
  c.compare("degenerations.flip", "#8 after two blowups", json{e2.label(), marker_name(e2.marker)},
            json{"#8_2(-1)", "flip"});
  for (const auto& id : identifications())
    if (!id.applied) c.record("degenerations.identification." + id.from.label(), id.note, id.to.label());

  TablesReport tr = tables_json ? validate_tables(*tables_json) : validate_tables();
  for (const auto& e : tr.errors) c.error("tables.file", e);
  for (const auto& row : tr.rows) {
    json got = {{"components", row.components}, {"volume_sum", row.volume_sum}};
    if (!row.errors.empty()) got["errors"] = row.errors;
    c.add_raw("tables." + row.table + "[" + row.row + "]", "volumes sum to " + std::to_string(row.degree),
              row.pass ? CheckStatus::Pass : CheckStatus::Fail, got, json{{"volume_sum", row.degree}});
    if (notes)
      for (const auto& n : row.notes) notes->push_back("tables." + row.table + "[" + row.row + "]: " + n);
  }
  return {"global", c.take(), std::nullopt};
}

CaseReport verify_case(CaseId id) {
  Checks c(case_name(id) + ".");
  std::optional<Fan> fan;
  try {
    run_case(c, id, fan);
  } catch (const LatticeError& e) {
    c.error("pipeline", e.what());
  } catch (const GroupError& e) {
    c.error("pipeline", e.what());
  } catch (const FanError& e) {
    c.error("pipeline", e.what());
  }
  return {case_name(id), c.take(), std::move(fan)};
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport r;
  r.version = library_version();
  r.global = verify_global(options.tables_json, &r.notes);
  tally(r, r.global);
  for (CaseId id : kAllCases) {
    if (options.case_filter && *options.case_filter != id) continue;
    r.cases.push_back(verify_case(id));
    tally(r, r.cases.back());
  }
  return r;
}

std::string render_json(const VerifyReport& r) {
  json cases = json::array();
  for (const auto& cr : r.cases) cases.push_back(case_json(cr));
  json doc = {{"version", r.version},
              {"global", case_json(r.global)},
              {"cases", cases},
              {"notes", r.notes},
              {"summary", {{"pass", r.pass}, {"fail", r.fail}, {"recorded", r.recorded}}}};
  return doc.dump(2) + "\n";
}

std::string render_markdown(const VerifyReport& r) {
  std::ostringstream os;
  os << "# Burniat verification report\n\n";
  os << "version " << r.version << "\n\n";
  os << "summary: " << r.pass << " pass, " << r.fail << " fail, " << r.recorded << " recorded (\u25C7)\n\n";
  md_case(os, r.global);
  for (const auto& cr : r.cases) md_case(os, cr);
  if (!r.notes.empty()) {
    os << "## notes\n\n";
    for (const auto& n : r.notes) os << "- " << n << "\n";
  }
  return os.str();
}

}  // namespace burniat
