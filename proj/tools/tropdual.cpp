// Copyright 2026 The tropdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tropdual: command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 a theorem disagreement,
// failed invariant or rejected certificate.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "tropdual/tropdual.hpp"

namespace {

using namespace tropdual;

constexpr int kExitInput = 1;
constexpr int kExitDisagree = 2;

struct Options {
  std::string file;
  std::string out;
  std::string witness;
  std::string format = "svg";
  std::string mode = "univariate";
  Engine engine = Engine::automatic;
  std::optional<std::int64_t> n_shift;
  bool refutation = false;
  bool timing = false;
  unsigned threads = 0;
  CampaignConfig campaign;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot write " + o.out);
  f << text;
}

void emit(const Options& o, const Json& doc) { emit(o, doc.dump(2) + "\n"); }

int cmd_roots(const Options& o) {
  const auto system = read_system_file(o.file);
  Json roots = Json::array();
  for (const auto& f : system) roots.push_back(roots_to_json(univariate_roots(f)));
  emit(o, Json{{"roots", std::move(roots)}});
  return 0;
}

int cmd_cayley(const Options& o) {
  const auto system = read_system_file(o.file);
  const auto n = o.n_shift.value_or(4 * total_degree(system));
  emit(o, matrix_to_json(build_cayley(system, n)));
  return 0;
}

int cmd_linfeas(const Options& o) {
  const auto m = parse_matrix(read_json_file(o.file));
  const auto res = decide(m.matrix, o.engine);
  Json doc = result_to_json(res, m.cols, o.refutation);
  int code = 0;
  if (res.status == Status::infeasible) {
    const bool ok = res.refutation && check_refutation(m.matrix, *res.refutation);
    doc["refutation_verified"] = res.refutation ? Json(ok) : Json(nullptr);
    if (res.refutation && !ok) code = kExitDisagree;
  }
  emit(o, doc);
  return code;
}

int cmd_solve(const Options& o) {
  const auto system = read_system_file(o.file);
  const auto zero = find_common_zero(system);
  emit(o, Json{{"n", system.front().n()},
               {"solvable", zero.has_value()},
               {"zero", zero ? point_to_json(*zero) : Json(nullptr)}});
  return 0;
}

int cmd_theorem(const Options& o) {
  const auto system = read_system_file(o.file);
  const auto rep = theorem1_verify(system, o.engine);
  emit(o, theorem_to_json(rep));
  return rep.ok() ? 0 : kExitDisagree;
}

// Largest N whose Cayley columns are all present in the witness.
std::int64_t infer_shift_bound(std::span<const TropPoly> system,
                               const ExponentWitness& y) {
  auto covered = [&](std::int64_t n) {
    const auto c = build_cayley(system, n);
    return std::all_of(c.cols.begin(), c.cols.end(),
                       [&](const Exponent& e) { return y.count(e) > 0; });
  };
  if (!covered(0)) throw WitnessViolation("witness misses columns of C_0");
  std::int64_t n = 0;
  while (n < static_cast<std::int64_t>(y.size()) && covered(n + 1)) ++n;
  return n;
}

int cmd_plot(const Options& o) {
  const auto system = read_system_file(o.file);
  std::optional<ExponentWitness> y;
  std::int64_t n = 0;
  if (!o.witness.empty()) {
    y = parse_witness(read_json_file(o.witness));
    n = o.n_shift ? *o.n_shift : infer_shift_bound(system, *y);
  }
  if (o.format == "svg") {
    emit(o, render_svg(system, y, n));
    return 0;
  }
  std::vector<NewtonPolygon> polygons;
  for (const auto& f : system) {
    detail::require_univariate(f, "plot");
    polygons.push_back(newton_polygon(f));
  }
  if (!y) {
    emit(o, geometry_to_json(polygons, nullptr));
    return 0;
  }
  const auto c = build_cayley(system, n);
  const auto report = verify_witness(c.matrix, c.index(*y));
  if (!report.all_ok()) {
    // render_svg words the diagnostic; reuse it.
    render_svg(system, y, n);
  }
  const auto g = analyze_system(system, line_witness(*y), -n, n);
  Json doc = geometry_to_json(polygons, &g);
  doc["n_shift"] = n;
  emit(o, doc);
  return 0;
}

int cmd_probe(const Options& o) {
  const auto system = read_system_file(o.file);
  const auto rep = conjecture_probe(system, o.n_shift.value_or(3), o.engine);
  emit(o, probe_to_json(rep));
  return rep.easy_direction_holds ? 0 : kExitDisagree;
}

int cmd_campaign(const Options& o) {
  CampaignConfig cfg = o.campaign;
  const unsigned threads =
      o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  const auto start = std::chrono::steady_clock::now();
  CampaignResult res;
  if (o.mode == "bivariate") {
    cfg.mode = CampaignMode::bivariate;
    res = run_bivariate_campaign(cfg, threads, o.n_shift.value_or(3));
  } else if (o.mode == "invariants") {
    res = run_invariant_suite(cfg, threads, o.engine);
  } else {
    res = run_univariate_campaign(cfg, threads, o.engine);
  }
  if (o.timing) {
    res.report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
  }
  emit(o, res.report);
  return res.ok ? 0 : kExitDisagree;
}

const std::map<std::string, Engine> kEngines{
    {"exact", Engine::exact}, {"lift", Engine::lift}, {"auto", Engine::automatic}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical polynomial systems and their Cayley matrices"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", o.file, what)->required()->check(CLI::ExistingFile);
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out,-o", o.out, "Output path (default stdout)");
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--engine", o.engine, "exact | lift | auto")
        ->transform(CLI::CheckedTransformer(kEngines, CLI::ignore_case));
  };
  auto add_shift = [&](CLI::App* sub, const char* what) {
    sub->add_option("--n-shift,-N", o.n_shift, what)->check(CLI::NonNegativeNumber);
  };

  auto* roots = app.add_subcommand("roots", "Tropical roots of each univariate polynomial");
  add_file(roots, "System JSON");
  add_out(roots);

  auto* cayley = app.add_subcommand("cayley", "Truncated Cayley matrix C_N");
  add_file(cayley, "System JSON");
  add_shift(cayley, "Shift bound N (default 4 * sum of degrees)");
  add_out(cayley);

  auto* linfeas = app.add_subcommand("linfeas", "Decide whether a matrix has a tropical zero");
  add_file(linfeas, "Matrix JSON");
  add_engine(linfeas);
  linfeas->add_flag("--refutation", o.refutation, "Include the refutation tree");
  add_out(linfeas);

  auto* solve = app.add_subcommand("solve", "Common tropical zero of a system (n = 1 or 2)");
  add_file(solve, "System JSON");
  add_out(solve);

  auto* theorem = app.add_subcommand("theorem", "Compare solvability with feasibility of C_N");
  add_file(theorem, "System JSON");
  add_engine(theorem);
  add_out(theorem);

  auto* plot = app.add_subcommand("plot", "Newton polygons and witness geometry");
  add_file(plot, "System JSON");
  plot->add_option("--witness,-w", o.witness, "Witness JSON")->check(CLI::ExistingFile);
  plot->add_option("--format", o.format, "svg | json")
      ->check(CLI::IsMember({"svg", "json"}));
  add_shift(plot, "Shift bound of the witness (default: inferred from its columns)");
  add_out(plot);

  auto* probe = app.add_subcommand("probe", "Feasibility of C_0 .. C_N next to the ground truth");
  add_file(probe, "System JSON");
  add_engine(probe);
  add_shift(probe, "Largest N probed (default 3)");
  add_out(probe);

  auto* campaign = app.add_subcommand("campaign", "Seeded random campaign");
  auto& cfg = o.campaign;
  campaign->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
  campaign->add_option("--count", cfg.count, "Instances")->capture_default_str();
  campaign->add_option("--max-s", cfg.max_s, "Polynomials per system")
      ->check(CLI::PositiveNumber)->capture_default_str();
  campaign->add_option("--max-deg", cfg.max_deg, "Largest exponent")
      ->check(CLI::PositiveNumber)->capture_default_str();
  campaign->add_option("--coeff-range", cfg.coeff_range, "Coefficients in [-R, R]")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  campaign->add_option("--mode", o.mode, "univariate | bivariate | invariants")
      ->check(CLI::IsMember({"univariate", "bivariate", "invariants"}))
      ->capture_default_str();
  campaign->add_option("--engine", o.engine, "exact | lift | auto (default exact)")
      ->transform(CLI::CheckedTransformer(kEngines, CLI::ignore_case));
  add_shift(campaign, "Bivariate mode: largest N checked (default 3)");
  campaign->add_option("--threads,-j", o.threads, "Worker threads (default: all cores)");
  campaign->add_flag("--timing", o.timing, "Add elapsed_ms to the report");
  add_out(campaign);

  // Defaults that differ per command.
  campaign->preparse_callback([&](std::size_t) { o.engine = Engine::exact; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*roots) return cmd_roots(o);
    if (*cayley) return cmd_cayley(o);
    if (*linfeas) return cmd_linfeas(o);
    if (*solve) return cmd_solve(o);
    if (*theorem) return cmd_theorem(o);
    if (*plot) return cmd_plot(o);
    if (*probe) return cmd_probe(o);
    if (*campaign) return cmd_campaign(o);
  } catch (const InvariantViolation& e) {
    std::cerr << "tropdual: invariant violated: " << e.what() << "\n";
    return kExitDisagree;
  } catch (const Error& e) {
    std::cerr << "tropdual: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "tropdual: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
