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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// all criteria pass. Reports are written to the directory given as the first
// argument, when present.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "support.hpp"

namespace {

using namespace tropdual;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  bool pass;
  std::string detail;
};

void print(int id, const Line& l) {
  std::printf("criterion %d: %s  %s\n", id, l.pass ? "PASS" : "FAIL", l.detail.c_str());
  std::fflush(stdout);
}

const CampaignConfig kUnivariate{.seed = 1, .count = 500, .max_s = 4, .max_deg = 5,
                                  .coeff_range = 5};
const CampaignConfig kInvariants{.seed = 1, .count = 200, .max_s = 4, .max_deg = 5,
                                 .coeff_range = 5};
const CampaignConfig kBivariate{.seed = 1, .count = 100, .max_s = 4, .max_deg = 3,
                                .coeff_range = 5, .mode = CampaignMode::bivariate};
constexpr std::int64_t kBivariateMaxN = 3;

Line disjoint_lines() {
  const auto t0 = Clock::now();
  const std::vector<TropPoly> s{testing::line("0"), testing::line("1")};
  const auto r0 = univariate_roots(s[0]);
  const auto r1 = univariate_roots(s[1]);
  bool ok = r0.size() == 1 && r0[0].value == 0 && r1.size() == 1 && r1[0].value == 1;
  ok = ok && !univariate_common_root(s);
  const auto bound = 4 * total_degree(s);
  ok = ok && bound == 8;
  std::string detail;
  for (std::int64_t n = 0; n <= bound; ++n) {
    const auto c = build_cayley(s, n);
    const auto res = decide_exact(c.matrix);
    const bool refuted = res.status == Status::infeasible && res.refutation &&
                         check_refutation(c.matrix, *res.refutation);
    ok = ok && refuted;
    if (!refuted) detail += " N=" + std::to_string(n) + " not refuted;";
  }
  const double elapsed = seconds_since(t0);
  ok = ok && elapsed < 1.0;
  return {ok, "roots {0} and {1}, C_0..C_8 infeasible in " + std::to_string(elapsed) + " s" +
                  detail};
}

/// Matrix suite: exact solver against the bounded grid search.
CampaignResult matrix_suite(unsigned threads) {
  constexpr std::uint64_t kCount = 1000;
  std::vector<testing::IntTable> tables(kCount);
  std::vector<std::size_t> widths(kCount);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (std::uint64_t k = 0; k < kCount; ++k) {
    const auto rows = dim(rng);
    widths[k] = dim(rng);
    tables[k] = testing::random_table(rng, rows, widths[k], 3, 30);
  }
  struct Outcome {
    bool feasible = false, agree = false, verified = false;
  };
  std::vector<Outcome> out(kCount);
  parallel_for(kCount, threads, [&](std::uint64_t k) {
    const auto m = testing::to_matrix(tables[k], widths[k]);
    const auto res = decide_exact(m);
    const bool oracle = testing::grid_oracle(tables[k], widths[k]).has_value();
    auto& o = out[k];
    o.feasible = res.status == Status::feasible;
    o.agree = o.feasible == oracle && res.status != Status::unknown;
    o.verified = o.feasible ? verify_witness(m, res.witness).all_ok()
                            : res.refutation && check_refutation(m, *res.refutation);
  });
  CampaignResult r;
  std::uint64_t feasible = 0, agree = 0, verified = 0;
  Json failures = Json::array();
  for (std::uint64_t k = 0; k < kCount; ++k) {
    feasible += out[k].feasible;
    agree += out[k].agree;
    verified += out[k].verified;
    if (!out[k].agree || !out[k].verified) failures.push_back(k);
  }
  r.ok = failures.empty();
  r.report = {{"count", kCount},  {"feasible", feasible}, {"agree", agree},
              {"verified", verified}, {"failures", std::move(failures)}};
  return r;
}

struct Reports {
  CampaignResult univariate, invariants, matrices, bivariate;
};

Reports run_all(unsigned threads) {
  return {run_univariate_campaign(kUnivariate, threads, Engine::exact),
          run_invariant_suite(kInvariants, threads, Engine::exact), matrix_suite(threads),
          run_bivariate_campaign(kBivariate, threads, kBivariateMaxN)};
}

Line theorem_campaign(const CampaignResult& r) {
  const auto& j = r.report;
  const bool ok = r.ok && j["agree"] == kUnivariate.count && j["errors"] == 0 &&
                  j["witness_to_root_ok"] == j["solvable"] &&
                  j["root_to_witness_ok"] == j["solvable"] && j["feasible"] == j["solvable"];
  return {ok, std::to_string(j["agree"].get<std::uint64_t>()) + "/500 agree, " +
                  std::to_string(j["solvable"].get<std::uint64_t>()) + " solvable"};
}

Line bound_ratio(const CampaignResult& r) {
  const auto& b = r.report["bound_ratio"];
  if (b["max"].is_null()) return {false, "no unsolvable instance"};
  const auto max = parse_rational(b["max"].get<std::string>());
  return {max <= 4 && r.report["unsolvable"] == [&] {
            std::uint64_t n = 0;
            for (const auto& [k, v] : r.report["minimal_infeasible_n"].items()) n += v.get<std::uint64_t>();
            return n;
          }(),
          "max minimal N / degree sum = " + to_string(max) + ", distribution " +
              b["histogram"].dump()};
}

Line invariants(const CampaignResult& r) {
  std::uint64_t checked = 0, violated = 0;
  for (const auto& [name, c] : r.report["checks"].items()) {
    checked += c["checked"].get<std::uint64_t>();
    violated += c["violated"].get<std::uint64_t>();
  }
  return {r.ok && r.report["pairs"] == 200 && violated == 0 && checked > 0,
          std::to_string(r.report["pairs"].get<std::uint64_t>()) + " pairs, " +
              std::to_string(checked) + " checks, " + std::to_string(violated) + " violations"};
}

Line matrices(const CampaignResult& r) {
  return {r.ok, std::to_string(r.report["agree"].get<std::uint64_t>()) + "/1000 agree, " +
                    std::to_string(r.report["feasible"].get<std::uint64_t>()) + " feasible"};
}

Line bivariate(const CampaignResult& r) {
  const auto bad = r.report["easy_direction_counterexamples"].get<std::uint64_t>();
  return {r.ok && bad == 0, std::to_string(r.report["solvable"].get<std::uint64_t>()) +
                                "/100 solvable, " + std::to_string(bad) + " counterexamples"};
}

void write(const std::filesystem::path& dir, const char* name, const Json& doc) {
  std::ofstream(dir / name) << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  bool all = true;
  auto record = [&](int id, const Line& l) {
    print(id, l);
    all = all && l.pass;
  };
  try {
    record(1, disjoint_lines());
    const auto t0 = Clock::now();
    const auto single = run_all(1);
    const double serial = seconds_since(t0);
    record(2, theorem_campaign(single.univariate));
    record(3, bound_ratio(single.univariate));
    record(4, invariants(single.invariants));
    record(5, matrices(single.matrices));
    record(6, bivariate(single.bivariate));
    const auto multi = run_all(3);
    const bool same = single.univariate.report.dump() == multi.univariate.report.dump() &&
                      single.invariants.report.dump() == multi.invariants.report.dump() &&
                      single.matrices.report.dump() == multi.matrices.report.dump() &&
                      single.bivariate.report.dump() == multi.bivariate.report.dump();
    record(7, {same, "reports for 1 and 3 threads " +
                         std::string(same ? "identical" : "differ") + " (serial run " +
                         std::to_string(serial) + " s)"});
    if (argc > 1) {
      const std::filesystem::path dir(argv[1]);
      std::filesystem::create_directories(dir);
      write(dir, "univariate.json", single.univariate.report);
      write(dir, "invariants.json", single.invariants.report);
      write(dir, "matrices.json", single.matrices.report);
      write(dir, "bivariate.json", single.bivariate.report);
    }
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 1;
  }
  return all ? 0 : 1;
}
