#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "frameopt/json_io.hpp"
#include "frameopt/verify.hpp"

namespace {

using namespace frameopt;

Frame pick_dual(const FrameFile& file, const std::string& mode,
                const Tolerances& tol) {
  if (mode == "canonical") return canonical_dual(file.frame, tol);
  if (mode == "file") {
    if (!file.dual) throw SchemaError("input file has no 'dual' key");
    return *file.dual;
  }
  return file.dual ? *file.dual : canonical_dual(file.frame, tol);
}

std::vector<MeasureKind> parse_measures(const std::string& name) {
  if (name == "O") return {MeasureKind::O};
  if (name == "r") return {MeasureKind::R};
  if (name == "A") return {MeasureKind::A};
  if (name == "all") return {MeasureKind::O, MeasureKind::R, MeasureKind::A};
  throw SchemaError("unknown measure '" + name + "' (expected O, r, A, all)");
}

int cmd_analyze(const std::string& path, int mult, const std::string& names,
                const std::string& dual_mode, const Tolerances& tol) {
  FrameFile file = load_frame_file(path);
  ProbabilityModel model =
      weights_from_probabilities(file.probabilities, file.frame.dim());
  Frame dual = pick_dual(file, dual_mode, tol);
  bool dual_ok = is_dual(file.frame, dual, tol);

  Json out;
  out["is_dual"] = dual_ok;
  Json q = Json::array();
  for (int i = 0; i < model.size(); ++i) q.push_back(model.q(i));
  out["weights"] = std::move(q);
  if (model.sub_unit_weight) out["sub_unit_weight"] = true;
  Json measures = Json::array();
  for (MeasureKind kind : parse_measures(names))
    measures.push_back(measure_report_to_json(
        measure(file.frame, dual, model, mult, kind, tol)));
  out["measures"] = std::move(measures);
  out["pair_verdict"] = pair_verdict_to_json(
      pair_verdict(file.frame, dual, model, tol, false));
  if (mult == 1)
    out["closed_form"] = measure_report_to_json(
        one_erasure_closed_form(file.frame, dual, model, tol));
  std::cout << out.dump(2) << "\n";

  if (!dual_ok) {
    std::cerr << "warning: the analyzed pair is not a dual pair\n";
    return 3;
  }
  return 0;
}

int cmd_search(const std::string& path, const SearchConfig& cfg,
               const std::string& name, const Tolerances& tol) {
  FrameFile file = load_frame_file(path);
  ProbabilityModel model =
      weights_from_probabilities(file.probabilities, file.frame.dim());
  std::vector<MeasureKind> kinds = parse_measures(name);
  if (kinds.size() != 1) throw SchemaError("search expects a single measure");
  SearchResult r = search_measure(file.frame, model, kinds[0], cfg);
  Json out = search_result_to_json(r);
  out["is_dual"] = is_dual(file.frame, r.dual, tol);
  std::cout << out.dump(2) << "\n";
  if (!r.converged)
    std::cerr << "warning: search stopped before reaching its step floor\n";
  return 0;
}

int cmd_construct(int dim, const std::vector<double>& probabilities) {
  RealVec p(static_cast<int>(probabilities.size()));
  for (size_t i = 0; i < probabilities.size(); ++i)
    p(static_cast<int>(i)) = probabilities[i];
  ProbabilityModel model = weights_from_probabilities(p, dim);
  FrameFile out;
  out.frame = construct_probability_uniform_parseval(model);
  out.probabilities = p;
  std::cout << frame_file_to_json(out).dump(2) << "\n";
  return 0;
}

int cmd_simulate(const std::string& path, SimConfig cfg,
                 const std::string& dual_mode, const Tolerances& tol) {
  FrameFile file = load_frame_file(path);
  ProbabilityModel model =
      weights_from_probabilities(file.probabilities, file.frame.dim());
  Frame dual = pick_dual(file, dual_mode, tol);
  SimReport report = simulate(file.frame, dual, model, cfg, tol);
  std::cout << sim_report_to_json(report).dump(2) << "\n";
  return 0;
}

int cmd_verify(bool perturb, const Tolerances& tol) {
  std::vector<ReferenceRow> rows = run_reference_checks(perturb, tol);
  Json out = Json::array();
  for (const ReferenceRow& r : rows) {
    Json row;
    row["example"] = r.example;
    row["check"] = r.check;
    row["status"] = r.status;
    row["computed"] = r.computed;
    row["expected"] = r.expected;
    if (!r.note.empty()) row["note"] = r.note;
    out.push_back(std::move(row));
  }
  std::cout << out.dump(2) << "\n";

  for (const ReferenceRow& r : rows)
    std::fprintf(stderr, "%-11s %-10s %-32s computed=%s expected=%s%s%s\n",
                 r.status.c_str(), r.example.c_str(), r.check.c_str(),
                 r.computed.c_str(), r.expected.c_str(),
                 r.note.empty() ? "" : "  # ", r.note.c_str());
  bool ok = all_reference_checks_pass(rows);
  std::fprintf(stderr, "%s\n", ok ? "all checks pass" : "CHECKS FAILED");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"probabilistic optimal dual frame analysis for erasures"};
  app.require_subcommand(1);
  // Let global flags like --tol appear after the subcommand arguments.
  app.fallthrough();
  double tol_flag = -1;
  app.add_option("--tol", tol_flag,
                 "base tolerance for duality and pair checks "
                 "(overrides FRAMEOPT_TOL; default 1e-10)");

  std::string input, measure_names = "all", dual_mode = "auto";
  int mult = 1;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "measures and pair verdict for a frame file");
  analyze->add_option("input", input, "frame JSON file")->required();
  analyze->add_option("--m", mult, "erasure multiplicity (default 1)");
  analyze->add_option("--measure", measure_names, "O, r, A, or all");
  analyze->add_option("--dual", dual_mode,
                      "canonical, file, or auto (file dual when present)");

  SearchConfig scfg;
  std::string search_measure_name = "A";
  CLI::App* search = app.add_subcommand(
      "search", "minimize a one-erasure measure over all duals");
  search->add_option("input", input, "frame JSON file")->required();
  search->add_option("--seed", scfg.seed, "PRNG seed (default 0)");
  search->add_option("--restarts", scfg.restarts, "restarts (default 8)");
  search->add_option("--iters", scfg.max_iters,
                     "total subgradient iterations (default 200000)");
  search->add_option("--step", scfg.step, "initial step size (default 0.5)");
  search->add_option("--search-tol", scfg.tol,
                     "objective improvement tolerance (default 1e-9)");
  search->add_option("--measure", search_measure_name, "O, r, or A");

  int dim = 0;
  std::vector<double> probabilities;
  CLI::App* construct = app.add_subcommand(
      "construct", "probability uniform Parseval frame from probabilities");
  construct->add_option("--dimension", dim, "ambient dimension")->required();
  construct
      ->add_option("--probabilities", probabilities,
                   "erasure probabilities (comma separated)")
      ->required()
      ->delimiter(',');

  SimConfig sim_cfg;
  std::string sim_mode = "weighted";
  CLI::App* sim = app.add_subcommand(
      "simulate", "Monte Carlo erasure simulation against the worst case");
  sim->add_option("input", input, "frame JSON file")->required();
  sim->add_option("--trials", sim_cfg.trials, "trials (default 10000)");
  sim->add_option("--signals", sim_cfg.signals,
                  "signals per trial (default 1)");
  sim->add_option("--m", sim_cfg.m, "erasure multiplicity (default 1)");
  sim->add_option("--seed", sim_cfg.seed, "PRNG seed (default 0)");
  sim->add_option("--mode", sim_mode, "weighted or raw");
  sim->add_option("--dual", dual_mode,
                  "canonical, file, or auto (file dual when present)");

  bool perturb = false;
  CLI::App* verify = app.add_subcommand(
      "verify-examples", "recompute the bundled reference examples");
  verify->add_flag("--perturb", perturb,
                   "nudge one fixture to confirm mismatches are detected");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  frameopt::Tolerances tol = frameopt::Tolerances::from_env();
  if (tol_flag > 0) tol.base = tol_flag;

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(input, mult, measure_names, dual_mode, tol);
    if (app.got_subcommand(search))
      return cmd_search(input, scfg, search_measure_name, tol);
    if (app.got_subcommand(construct)) return cmd_construct(dim, probabilities);
    if (app.got_subcommand(sim)) {
      if (sim_mode != "weighted" && sim_mode != "raw")
        throw SchemaError("unknown mode '" + sim_mode + "'");
      sim_cfg.weighted = sim_mode == "weighted";
      return cmd_simulate(input, sim_cfg, dual_mode, tol);
    }
    if (app.got_subcommand(verify)) return cmd_verify(perturb, tol);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
