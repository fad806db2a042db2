#include "run_cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "smtc/axioms.hpp"
#include "smtc/catalog.hpp"
#include "smtc/category.hpp"
#include "smtc/extension.hpp"
#include "smtc/indicators.hpp"
#include "smtc/invariants.hpp"
#include "smtc/io.hpp"
#include "smtc/symmetry.hpp"

namespace smtc {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Ctx {
  double tol = kDefaultTolerance;
  bool json = false;
};

CategoryRecord load_input(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) return catalog_category(spec.substr(8));
  return load_category(spec);
}

FermionicAction load_action_spec(const std::string& spec, const SuperMTC& C) {
  if (spec.rfind("catalog:", 0) == 0) return catalog_action(spec.substr(8), C);
  if (spec.find('/') == std::string::npos &&
      spec.find(".json") == std::string::npos) {
    return catalog_action(spec, C);
  }
  return load_action(spec, C);
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string fmt(cplx z) {
  std::ostringstream os;
  os << std::setprecision(10) << z.real() << (z.imag() < 0 ? " - " : " + ")
     << std::abs(z.imag()) << "i";
  return os.str();
}

ordered_json json_cplx(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

std::optional<int> sixteenth_of(cplx b) {
  const double step = std::arg(b) / (std::numbers::pi / 8.0);
  const int k = static_cast<int>(std::llround(step));
  if (std::abs(step - k) > 1e-6) return std::nullopt;
  return (k % 16 + 16) % 16;
}

ordered_json json_indicator(const IndicatorResult& ind) {
  ordered_json j;
  j["name"] = ind.name;
  j["value"] = json_cplx(ind.value);
  j["classification"] = ind.classification;
  j["order"] = ind.order;
  if (ind.nu)
    j["nu"] = *ind.nu;
  else
    j["nu"] = nullptr;
  ordered_json sh = ordered_json::array();
  for (cplx z : ind.shadows) sh.push_back(json_cplx(z));
  j["shadows"] = std::move(sh);
  return j;
}

ordered_json json_hall(const HallConductance& hall) {
  ordered_json j;
  j["sigma_h"] = hall.sigma_h.str();
  j["kappa"] = hall.kappa.str();
  j["modulus"] = hall.modulus.str();
  return j;
}

void print_indicator(const IndicatorResult& ind) {
  std::cout << "  " << ind.name << " = " << fmt(ind.value);
  if (ind.nu) std::cout << "   nu = " << *ind.nu << " (mod " << ind.order << ")";
  std::cout << "\n";
  if (!ind.shadows.empty()) {
    std::cout << "    shadows:";
    for (cplx z : ind.shadows) std::cout << "  " << fmt(z);
    std::cout << "\n";
  }
}

// ---- verify ---------------------------------------------------------------

int do_verify(const Ctx& ctx, const std::string& cat_spec,
              const std::string& act_spec) {
  CategoryRecord record = load_input(cat_spec);
  const SuperMTC& C = record.category;

  std::vector<std::pair<std::string, Report>> stages;
  stages.emplace_back("structure", validate_structure(C));
  stages.emplace_back("pentagon", check_pentagon(C, ctx.tol));
  stages.emplace_back("hexagon", check_hexagon(C, ctx.tol));
  stages.emplace_back("unitarity", check_unitarity(C, ctx.tol));
  const bool plain = muger_center(C, ctx.tol).size() == 1;
  if (plain)
    stages.emplace_back("modular", check_modular(C, ctx.tol));
  else
    stages.emplace_back("super_modular", check_super_modular(C, ctx.tol));
  std::string embed_note;
  if (!record.embedding_base.empty()) {
    try {
      CategoryRecord base = catalog_category(record.embedding_base);
      stages.emplace_back("embedding", embed_check(base.category, record, ctx.tol));
    } catch (const ShapeError&) {
      embed_note = cat("embedding base '", record.embedding_base,
                       "' is not in the catalog; embedding not checked");
    }
  }

  std::optional<FermionicAction> A;
  if (!act_spec.empty()) {
    A = load_action_spec(act_spec, C);
    stages.emplace_back("action_structure", validate_action(C, *A, ctx.tol));
    stages.emplace_back("u_f_u_r", check_ufur(C, *A, ctx.tol));
    stages.emplace_back("u_eta", check_u_eta(C, *A, ctx.tol));
    if (!A->partial)
      stages.emplace_back("eta_cocycle", check_eta_cocycle(C, *A, ctx.tol));
    stages.emplace_back("fermion_class", check_fermion_class(C, *A, ctx.tol));
  }

  bool all_ok = true;
  for (const auto& [name, report] : stages) all_ok = all_ok && report.ok();

  if (ctx.json) {
    ordered_json j;
    j["command"] = "verify";
    j["category"] = C.name;
    j["action"] = A ? ordered_json(A->name) : ordered_json(nullptr);
    if (A) j["partial_action"] = A->partial;
    ordered_json st = ordered_json::array();
    for (const auto& [name, report] : stages) {
      ordered_json s;
      s["name"] = name;
      s["ok"] = report.ok();
      s["violations"] = report.total();
      s["messages"] = report.messages();
      st.push_back(std::move(s));
    }
    if (A && A->partial)
      st.push_back({{"name", "eta_cocycle"},
                    {"ok", nullptr},
                    {"violations", nullptr},
                    {"messages", ordered_json::array(
                                     {"skipped: partial action records an "
                                      "obstruction witness"})}});
    j["stages"] = std::move(st);
    if (!embed_note.empty()) j["note"] = embed_note;
    j["ok"] = all_ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verify " << C.name;
    if (A) std::cout << " with action " << A->name;
    std::cout << "\n";
    for (const auto& [name, report] : stages) {
      if (report.ok())
        std::cout << "  " << name << ": ok\n";
      else
        std::cout << "  " << name << ": " << report.summary() << "\n";
    }
    if (A && A->partial)
      std::cout << "  eta_cocycle: skipped (partial action records an "
                   "obstruction witness)\n";
    if (!embed_note.empty()) std::cout << "  note: " << embed_note << "\n";
    std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_ok ? 0 : 1;
}

// ---- invariants -----------------------------------------------------------

int do_invariants(const Ctx& ctx, const std::string& cat_spec) {
  CategoryRecord record = load_input(cat_spec);
  const SuperMTC& C = record.category;
  InvariantSummary s = invariant_summary(C, ctx.tol);

  if (ctx.json) {
    ordered_json j;
    j["command"] = "invariants";
    j["category"] = C.name;
    j["anyons"] = C.anyon_names;
    j["quantum_dimensions"] = s.dims;
    j["total_dimension"] = s.total_dim;
    ordered_json tw = ordered_json::array();
    for (cplx t : s.twists) tw.push_back(json_cplx(t));
    j["twists"] = std::move(tw);
    ordered_json sm = ordered_json::array();
    for (int a = 0; a < C.size(); ++a) {
      ordered_json row = ordered_json::array();
      for (int b = 0; b < C.size(); ++b) row.push_back(json_cplx(s.S(a, b)));
      sm.push_back(std::move(row));
    }
    j["s_matrix"] = std::move(sm);
    ordered_json center = ordered_json::array();
    for (AnyonLabel a : s.center) center.push_back(C.anyon_name(a));
    j["muger_center"] = std::move(center);
    j["central_charge"] = s.c ? ordered_json(*s.c) : ordered_json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "invariants of " << C.name << "\n";
    for (int a = 0; a < C.size(); ++a)
      std::cout << "  " << C.anyon_name(a) << ": d = " << fmt(s.dims[a])
                << ", theta = " << fmt(s.twists[a]) << "\n";
    std::cout << "  total dimension D = " << fmt(s.total_dim) << "\n";
    std::cout << "  Muger center:";
    for (AnyonLabel a : s.center) std::cout << " " << C.anyon_name(a);
    std::cout << "\n";
    if (s.c) std::cout << "  central charge c = " << fmt(*s.c) << " (mod 8)\n";
  }
  return 0;
}

// ---- indicators -----------------------------------------------------------

int do_indicators(const Ctx& ctx, const std::string& cat_spec,
                  const std::string& act_spec, const std::string& symmetry) {
  CategoryRecord record = load_input(cat_spec);
  const SuperMTC& C = record.category;
  FermionicAction A = load_action_spec(act_spec, C);
  TenfoldReport rep = tenfold_report(C, A, symmetry);

  if (ctx.json) {
    ordered_json j;
    j["command"] = "indicators";
    j["category"] = C.name;
    j["action"] = A.name;
    j["symmetry_class"] = rep.symmetry_class;
    j["classification"] = rep.classification;
    ordered_json inds = ordered_json::array();
    for (const auto& ind : rep.indicators) inds.push_back(json_indicator(ind));
    j["indicators"] = std::move(inds);
    j["hall"] = rep.hall ? json_hall(*rep.hall) : ordered_json(nullptr);
    j["gapless"] = rep.gapless;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "indicators of " << C.name << " under " << A.name
              << " (class " << rep.symmetry_class << ", " << rep.classification
              << ")\n";
    for (const auto& ind : rep.indicators) print_indicator(ind);
    if (rep.hall)
      std::cout << "  sigma_H = " << rep.hall->sigma_h.str() << " (mod "
                << rep.hall->modulus.str() << "), kappa = "
                << rep.hall->kappa.str() << "\n";
    for (const auto& note : rep.gapless) std::cout << "  gapless: " << note << "\n";
  }
  return 0;
}

// ---- gauge-orbit ----------------------------------------------------------

int do_gauge_orbit(const Ctx& ctx, const std::string& cat_spec,
                   const std::string& act_spec, int samples,
                   std::uint64_t seed) {
  CategoryRecord record = load_input(cat_spec);
  const SuperMTC& C = record.category;
  FermionicAction A = load_action_spec(act_spec, C);

  std::optional<TenfoldReport> baseline;
  try {
    baseline = tenfold_report(C, A);
  } catch (const ShapeError&) {
    // No inferable indicator for this action; track checks only.
  }

  const bool plain = muger_center(C, ctx.tol).size() == 1;
  long long failures = 0;
  double max_drift = 0.0;
  for (int i = 0; i < samples; ++i) {
    GaugeSample gs = random_gauge(C, &A, seed + static_cast<std::uint64_t>(i));
    SuperMTC C2 = apply_vertex_gauge(C, gs.vertex);
    FermionicAction A2 = apply_vertex_gauge(A, C, gs.vertex);
    A2 = apply_action_gauge(A2, C2, gs.action);

    Report checks;
    checks.merge(check_axioms(C2, ctx.tol));
    checks.merge(plain ? check_modular(C2, ctx.tol)
                       : check_super_modular(C2, ctx.tol));
    checks.merge(check_action(C2, A2, ctx.tol));
    if (!checks.ok()) ++failures;

    if (baseline) {
      TenfoldReport rep = tenfold_report(C2, A2, baseline->symmetry_class);
      for (std::size_t k = 0; k < rep.indicators.size(); ++k) {
        double drift =
            std::abs(rep.indicators[k].value - baseline->indicators[k].value);
        max_drift = std::max(max_drift, drift);
      }
    }
  }
  const bool ok = failures == 0 && max_drift < 1e-8;

  if (ctx.json) {
    ordered_json j;
    j["command"] = "gauge-orbit";
    j["category"] = C.name;
    j["action"] = A.name;
    j["samples"] = samples;
    j["seed"] = seed;
    j["check_failures"] = failures;
    j["indicators_tracked"] =
        baseline ? baseline->indicators.size() : std::size_t(0);
    j["max_indicator_drift"] = max_drift;
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "gauge orbit of " << C.name << " under " << A.name << ": "
              << samples << " samples from seed " << seed << "\n";
    std::cout << "  check failures: " << failures << "\n";
    if (baseline)
      std::cout << "  max indicator drift: " << fmt(max_drift) << "\n";
    else
      std::cout << "  no inferable indicator; checks only\n";
    std::cout << (ok ? "gauge invariance holds" : "GAUGE INVARIANCE BROKEN")
              << "\n";
  }
  return ok ? 0 : 1;
}

// ---- zest -----------------------------------------------------------------

int do_zest(const Ctx& ctx, const std::string& cat_spec,
            std::optional<double> target_c, std::optional<int> parameter_k,
            const std::string& fermion_image) {
  CategoryRecord record = load_input(cat_spec);
  SuperMTC E = record.category;
  if (!fermion_image.empty()) E.fermion = E.label_of(fermion_image);
  if (!E.has_fermion())
    throw ShapeError(
        "the extension declares no fermion image; pass --fermion-image");

  std::vector<ZestResult> results;
  if (parameter_k) {
    cplx b = std::polar(1.0, std::numbers::pi * (*parameter_k) / 8.0);
    if (auto z = zest(E, E.fermion, b)) results.push_back(std::move(*z));
  } else {
    results = zest_search(E, E.fermion);
  }
  if (target_c) {
    std::vector<ZestResult> kept;
    double want = std::fmod(std::fmod(*target_c, 8.0) + 8.0, 8.0);
    for (auto& z : results) {
      double c = std::fmod(std::fmod(z.central_charge, 8.0) + 8.0, 8.0);
      if (std::abs(c - want) < 1e-6 || std::abs(c - want - 8.0) < 1e-6 ||
          std::abs(c - want + 8.0) < 1e-6)
        kept.push_back(std::move(z));
    }
    results = std::move(kept);
  }

  if (ctx.json) {
    ordered_json j;
    j["command"] = "zest";
    j["category"] = record.category.name;
    j["fermion_image"] = E.anyon_name(E.fermion);
    ordered_json rs = ordered_json::array();
    for (const auto& z : results) {
      ordered_json r;
      r["name"] = z.category.name;
      r["parameter"] = json_cplx(z.parameter);
      auto k = sixteenth_of(z.parameter);
      r["parameter_sixteenth"] = k ? ordered_json(*k) : ordered_json(nullptr);
      r["central_charge"] = z.central_charge;
      int odd = 0;
      for (int e : z.grading) odd += e;
      r["odd_anyons"] = odd;
      rs.push_back(std::move(r));
    }
    j["results"] = std::move(rs);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "zests of " << record.category.name << " along "
              << E.anyon_name(E.fermion) << "\n";
    for (const auto& z : results) {
      auto k = sixteenth_of(z.parameter);
      std::cout << "  b = " << fmt(z.parameter);
      if (k) std::cout << " (pi*" << *k << "/8)";
      std::cout << ": c = " << fmt(z.central_charge) << ", " << z.category.name
                << "\n";
    }
    if (results.empty()) std::cout << "  no consistent zest\n";
  }
  return results.empty() ? 1 : 0;
}

// ---- cascade --------------------------------------------------------------

int do_cascade(const Ctx& ctx, const std::string& cat_spec,
               const std::string& act_spec, const std::string& ext_spec,
               const std::string& ext_act_spec,
               const std::string& fermion_image) {
  CategoryRecord record = load_input(cat_spec);
  const SuperMTC& C = record.category;
  FermionicAction A = load_action_spec(act_spec, C);
  CategoryRecord ext = load_input(ext_spec);
  if (!fermion_image.empty())
    ext.category.fermion = ext.category.label_of(fermion_image);

  Layer1Result l1 = cascade_layer1(ext.category);

  std::optional<FermionicAction> ext_action;
  std::string layer3_note;
  if (!ext_act_spec.empty()) {
    ext_action = load_action_spec(ext_act_spec, ext.category);
  } else {
    std::vector<std::string> names = catalog_actions_for(ext.category.name);
    if (names.size() == 1)
      ext_action = catalog_action(names[0], ext.category);
    else
      layer3_note = "no extension action given; layer 3 skipped";
  }
  std::optional<Layer3Result> l3;
  if (ext_action) l3 = cascade_layer3(C, A, ext, *ext_action);

  if (ctx.json) {
    ordered_json j;
    j["command"] = "cascade";
    j["category"] = C.name;
    j["action"] = A.name;
    j["extension"] = ext.category.name;
    ordered_json j1;
    j1["charges"] = l1.charges;
    j1["obstructed"] = l1.obstructed;
    j["layer1"] = std::move(j1);
    if (l3) {
      ordered_json j3;
      j3["extension_action"] = ext_action->name;
      j3["candidates"] = l3->candidates;
      j3["u_eta_pass"] = l3->u_eta_pass;
      j3["cocycle_pass"] = l3->cocycle_pass;
      j3["obstructed"] = l3->obstructed;
      j3["witness"] = l3->witness.has_value();
      j["layer3"] = std::move(j3);
    } else {
      j["layer3"] = nullptr;
      j["layer3_note"] = layer3_note;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "anomaly cascade for " << C.name << " under " << A.name
              << " with extension " << ext.category.name << "\n";
    std::cout << "  layer 1: reachable central charges";
    for (double c : l1.charges) std::cout << " " << fmt(c);
    std::cout << " -> " << (l1.obstructed ? "OBSTRUCTED" : "unobstructed")
              << "\n";
    if (l3) {
      std::cout << "  layer 3 (" << ext_action->name << "): " << l3->candidates
                << " candidates, " << l3->u_eta_pass << " solve U-eta, "
                << l3->cocycle_pass << " close the cocycle -> "
                << (l3->obstructed ? "OBSTRUCTED" : "unobstructed") << "\n";
    } else {
      std::cout << "  layer 3: " << layer3_note << "\n";
    }
  }
  return 0;
}

// ---- catalog --------------------------------------------------------------

int do_catalog_list(const Ctx& ctx) {
  if (ctx.json) {
    ordered_json j;
    j["command"] = "catalog";
    j["categories"] = catalog_names();
    ordered_json acts = ordered_json::array();
    for (const std::string& cname : catalog_names())
      for (const std::string& aname : catalog_actions_for(cname))
        acts.push_back({{"name", aname}, {"category", cname}});
    j["actions"] = std::move(acts);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "categories:\n";
    for (const std::string& cname : catalog_names()) {
      std::cout << "  " << cname;
      std::vector<std::string> acts = catalog_actions_for(cname);
      if (!acts.empty()) {
        std::cout << "   actions:";
        for (const std::string& aname : acts) std::cout << " " << aname;
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int do_catalog_export(const std::string& name, const std::string& path) {
  for (const std::string& cname : catalog_names()) {
    if (cname == name) {
      save_category(catalog_category(name), path);
      std::cout << "wrote category " << name << " to " << path << "\n";
      return 0;
    }
  }
  for (const std::string& cname : catalog_names()) {
    for (const std::string& aname : catalog_actions_for(cname)) {
      if (aname == name) {
        SuperMTC C = catalog_category(cname).category;
        save_action(catalog_action(name, C), C, path);
        std::cout << "wrote action " << name << " to " << path << "\n";
        return 0;
      }
    }
  }
  throw ShapeError(cat("unknown catalog entry '", name, "'"));
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"super modular tensor categories: verification, anomaly "
               "indicators, zesting, and the anomaly cascade"};
  app.name("smtc");
  app.require_subcommand(1);

  Ctx ctx;
  app.add_option("--tolerance", ctx.tol, "numeric tolerance for checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", ctx.json, "emit machine-readable JSON");

  std::string cat_spec, act_spec, symmetry, ext_spec, ext_act_spec;
  std::string fermion_image, export_name, export_path;
  int samples = 100;
  std::uint64_t seed = 0;
  std::optional<double> target_c;
  std::optional<int> parameter_k;
  int rc = 0;

  CLI::App* verify = app.add_subcommand("verify", "run all consistency checks");
  verify->add_option("category", cat_spec, "catalog:<name> or a JSON file")
      ->required();
  verify->add_option("--action", act_spec, "action to check against");
  verify->fallthrough();
  verify->callback([&] { rc = do_verify(ctx, cat_spec, act_spec); });

  CLI::App* inv = app.add_subcommand("invariants", "dimensions, twists, S, c");
  inv->add_option("category", cat_spec, "catalog:<name> or a JSON file")
      ->required();
  inv->fallthrough();
  inv->callback([&] { rc = do_invariants(ctx, cat_spec); });

  CLI::App* ind =
      app.add_subcommand("indicators", "evaluate anomaly indicators");
  ind->add_option("category", cat_spec, "catalog:<name> or a JSON file")
      ->required();
  ind->add_option("--action", act_spec, "symmetry action")->required();
  ind->add_option("--symmetry", symmetry,
                  "pin+|epin|classA|classC|AI|AII|AIII|CI|CII (inferred when "
                  "omitted)");
  ind->fallthrough();
  ind->callback([&] { rc = do_indicators(ctx, cat_spec, act_spec, symmetry); });

  CLI::App* orbit = app.add_subcommand(
      "gauge-orbit", "indicator stability under random gauges");
  orbit->add_option("category", cat_spec, "catalog:<name> or a JSON file")
      ->required();
  orbit->add_option("--action", act_spec, "symmetry action")->required();
  orbit->add_option("--samples", samples, "number of random gauges")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  orbit->add_option("--seed", seed, "base RNG seed")->capture_default_str();
  orbit->fallthrough();
  orbit->callback(
      [&] { rc = do_gauge_orbit(ctx, cat_spec, act_spec, samples, seed); });

  CLI::App* zst = app.add_subcommand("zest", "re-glue a pointed extension");
  zst->add_option("category", cat_spec, "catalog:<name> or a JSON file")
      ->required();
  zst->add_option("--target-c", target_c, "keep zests with this c mod 8");
  zst->add_option("--parameter-k", parameter_k,
                  "single parameter b = exp(i pi k / 8)");
  zst->add_option("--fermion-image", fermion_image,
                  "anyon name to grade along (default: recorded fermion)");
  zst->fallthrough();
  zst->callback(
      [&] { rc = do_zest(ctx, cat_spec, target_c, parameter_k, fermion_image); });

  CLI::App* casc =
      app.add_subcommand("cascade", "layered obstruction diagnostics");
  casc->add_option("category", cat_spec, "catalog:<name> or a JSON file")
      ->required();
  casc->add_option("--action", act_spec, "symmetry action on the base")
      ->required();
  casc->add_option("--extension", ext_spec, "modular extension record")
      ->required();
  casc->add_option("--ext-action", ext_act_spec,
                   "candidate action on the extension");
  casc->add_option("--fermion-image", fermion_image,
                   "fermion image in the extension (overrides the record)");
  casc->fallthrough();
  casc->callback([&] {
    rc = do_cascade(ctx, cat_spec, act_spec, ext_spec, ext_act_spec,
                    fermion_image);
  });

  CLI::App* catalog = app.add_subcommand("catalog", "built-in data");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "list built-ins");
  list->fallthrough();
  list->callback([&] { rc = do_catalog_list(ctx); });
  CLI::App* exp = catalog->add_subcommand("export", "write a built-in to JSON");
  exp->add_option("name", export_name, "category or action name")->required();
  exp->add_option("path", export_path, "output file")->required();
  exp->callback([&] { rc = do_catalog_export(export_name, export_path); });

  std::vector<const char*> argv;
  argv.push_back("smtc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace smtc
