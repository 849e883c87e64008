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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tropdual/bivariate.hpp"
#include "tropdual/dual_nss.hpp"
#include "tropdual/io.hpp"
#include "tropdual/random.hpp"

namespace tropdual {

/// Runs body(0) .. body(count - 1) on `threads` workers. Results must be
/// written to per-index slots by the caller, which keeps output independent
/// of scheduling. The first exception is rethrown after all workers stop.
inline void parallel_for(std::uint64_t count, unsigned threads,
                         const std::function<void(std::uint64_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(
                             threads, static_cast<unsigned>(
                                          std::max<std::uint64_t>(count, 1))));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const auto k = next.fetch_add(1);
      if (k >= count) return;
      try {
        body(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline const char* to_string(CampaignMode m) {
  return m == CampaignMode::univariate ? "univariate" : "bivariate";
}

inline Json config_to_json(const CampaignConfig& cfg) {
  return {{"seed", cfg.seed},
          {"count", cfg.count},
          {"max_s", cfg.max_s},
          {"max_deg", cfg.max_deg},
          {"coeff_range", cfg.coeff_range},
          {"mode", to_string(cfg.mode)}};
}

namespace detail {

template <typename Map>
Json histogram_json(const Map& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) {
    if constexpr (std::is_same_v<typename Map::key_type, Rational>) {
      out[to_string(k)] = v;
    } else {
      out[std::to_string(k)] = v;
    }
  }
  return out;
}

}  // namespace detail

/// Per-instance outcome of the univariate campaign.
struct TheoremInstance {
  std::size_t polys = 0;
  TheoremReport theorem;
  std::optional<ProofReport> invariants;
  std::string error;
};

struct CampaignResult {
  Json report;
  bool ok = true;
};

/// Univariate: checks the degree bound on each instance, the witness/root
/// conversions, and the proof invariants on every feasible witness.
/// The report lists the distribution of minimal infeasible N / sum trdeg
/// over unsolvable instances.
inline CampaignResult run_univariate_campaign(const CampaignConfig& cfg,
                                              unsigned threads,
                                              Engine engine) {
  std::vector<TheoremInstance> out(cfg.count);
  parallel_for(cfg.count, threads, [&](std::uint64_t k) {
    const auto system = random_system(cfg, k);
    auto& inst = out[k];
    inst.polys = system.size();
    try {
      inst.theorem = theorem1_verify(system, engine);
      if (inst.theorem.witness) {
        const auto n = inst.theorem.shift_bound;
        inst.invariants = proof_invariant_report(
            system, line_witness(*inst.theorem.witness), -n, n);
      }
    } catch (const Error& e) {
      inst.error = e.what();
    }
  });

  CampaignResult res;
  std::uint64_t solvable = 0, agree = 0, extracted = 0, feasible = 0;
  std::uint64_t root_witness_ok = 0, invariant_failures = 0, errors = 0;
  std::map<Rational, std::uint64_t> ratios;
  std::map<std::int64_t, std::uint64_t> minimal;
  std::optional<Rational> max_ratio;
  Json failures = Json::array();
  for (std::uint64_t k = 0; k < cfg.count; ++k) {
    const auto& inst = out[k];
    const auto& t = inst.theorem;
    if (!inst.error.empty()) {
      ++errors;
      failures.push_back({{"index", k}, {"error", inst.error}});
      continue;
    }
    if (t.direct_root) ++solvable;
    if (t.agree) ++agree;
    if (t.cayley_status == Status::feasible) ++feasible;
    if (t.extracted) ++extracted;
    if (t.root_witness_verified.value_or(false)) ++root_witness_ok;
    if (t.minimal_infeasible) {
      ++minimal[*t.minimal_infeasible];
      if (t.degree_sum > 0) {
        const Rational ratio =
            make_rational(*t.minimal_infeasible, t.degree_sum);
        ++ratios[ratio];
        if (!max_ratio || ratio > *max_ratio) max_ratio = ratio;
      }
    }
    const bool inv_ok = !inst.invariants || inst.invariants->ok();
    if (!inv_ok) ++invariant_failures;
    if (!t.ok() || !inv_ok) {
      Json f = {{"index", k}, {"failures", t.failures}};
      if (!inv_ok) f["invariants"] = proof_report_to_json(*inst.invariants);
      failures.push_back(std::move(f));
    }
  }
  res.ok = failures.empty();
  Json& r = res.report;
  r["config"] = config_to_json(cfg);
  r["engine"] = to_string(engine);
  r["count"] = cfg.count;
  r["solvable"] = solvable;
  r["unsolvable"] = cfg.count - solvable - errors;
  r["agree"] = agree;
  r["feasible"] = feasible;
  r["witness_to_root_ok"] = extracted;
  r["root_to_witness_ok"] = root_witness_ok;
  r["invariant_failures"] = invariant_failures;
  r["errors"] = errors;
  r["bound_ratio"] = {
      {"max", max_ratio ? Json(to_string(*max_ratio)) : Json(nullptr)},
      {"factor", 4},
      {"histogram", detail::histogram_json(ratios)}};
  r["minimal_infeasible_n"] = detail::histogram_json(minimal);
  r["failures"] = std::move(failures);
  return res;
}

/// Proof invariants on `pairs` (system, witness) pairs: solvable systems from
/// the generator with witnesses of C_N, N = 4 sum trdeg, from `engine`.
inline CampaignResult run_invariant_suite(const CampaignConfig& cfg,
                                          unsigned threads, Engine engine) {
  // Instance indices are scanned in order so the chosen systems do not
  // depend on the thread count.
  std::vector<std::uint64_t> picked;
  for (std::uint64_t k = 0; picked.size() < cfg.count; ++k) {
    if (univariate_common_root(random_system(cfg, k))) picked.push_back(k);
  }
  std::vector<std::optional<ProofReport>> reports(picked.size());
  std::vector<std::string> errors(picked.size());
  parallel_for(picked.size(), threads, [&](std::uint64_t p) {
    const auto system = random_system(cfg, picked[p]);
    const auto n = 4 * total_degree(system);
    try {
      const auto c = build_cayley(system, n);
      const auto res = decide(c.matrix, engine);
      if (res.status != Status::feasible) {
        errors[p] = "no witness found for a solvable system";
        return;
      }
      reports[p] =
          proof_invariant_report(system, line_witness(c.label(res.witness)),
                                 -n, n);
    } catch (const Error& e) {
      errors[p] = e.what();
    }
  });

  CampaignResult res;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> totals;
  Json failures = Json::array();
  for (std::size_t p = 0; p < picked.size(); ++p) {
    if (!errors[p].empty()) {
      failures.push_back({{"index", picked[p]}, {"error", errors[p]}});
      continue;
    }
    for (const auto* c : reports[p]->checks()) {
      totals[c->name].first += c->checked;
      totals[c->name].second += c->violated;
    }
    if (!reports[p]->ok()) {
      failures.push_back({{"index", picked[p]},
                          {"invariants", proof_report_to_json(*reports[p])}});
    }
  }
  res.ok = failures.empty();
  Json checks = Json::object();
  for (const auto& [name, t] : totals) {
    checks[name] = {{"checked", t.first}, {"violated", t.second}};
  }
  res.report["config"] = config_to_json(cfg);
  res.report["engine"] = to_string(engine);
  res.report["pairs"] = picked.size();
  res.report["checks"] = std::move(checks);
  res.report["failures"] = std::move(failures);
  return res;
}

/// Bivariate: solves each system by arrangement sampling and, when a zero
/// exists, verifies the induced witness on C_N for N = 0 .. max_n.
inline CampaignResult run_bivariate_campaign(const CampaignConfig& cfg,
                                             unsigned threads,
                                             std::int64_t max_n) {
  struct Outcome {
    std::optional<std::vector<Rational>> zero;
    bool easy_ok = true;
    std::string error;
  };
  std::vector<Outcome> out(cfg.count);
  parallel_for(cfg.count, threads, [&](std::uint64_t k) {
    const auto system = random_system(cfg, k);
    auto& o = out[k];
    try {
      o.zero = find_common_zero(system);
      if (!o.zero) return;
      for (std::int64_t n = 0; n <= max_n; ++n) {
        const auto c = build_cayley(system, n);
        const auto y = root_to_witness(system, *o.zero, c.cols);
        o.easy_ok = o.easy_ok && verify_witness(c.matrix, c.index(y)).all_ok();
      }
    } catch (const Error& e) {
      o.error = e.what();
    }
  });
  CampaignResult res;
  std::uint64_t solvable = 0, counterexamples = 0;
  Json failures = Json::array();
  for (std::uint64_t k = 0; k < cfg.count; ++k) {
    const auto& o = out[k];
    if (!o.error.empty()) {
      failures.push_back({{"index", k}, {"error", o.error}});
      continue;
    }
    if (!o.zero) continue;
    ++solvable;
    if (!o.easy_ok) {
      ++counterexamples;
      failures.push_back({{"index", k}, {"zero", point_to_json(*o.zero)}});
    }
  }
  res.ok = failures.empty();
  res.report["config"] = config_to_json(cfg);
  res.report["count"] = cfg.count;
  res.report["max_n_shift"] = max_n;
  res.report["solvable"] = solvable;
  res.report["easy_direction_counterexamples"] = counterexamples;
  res.report["failures"] = std::move(failures);
  return res;
}

}  // namespace tropdual
