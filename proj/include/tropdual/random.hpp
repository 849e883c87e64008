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

#include <cstdint>
#include <random>
#include <vector>

#include "tropdual/poly.hpp"

namespace tropdual {

enum class CampaignMode { univariate, bivariate };

struct CampaignConfig {
  std::uint64_t seed = 1;
  std::uint64_t count = 10;
  std::int64_t max_s = 4;
  std::int64_t max_deg = 5;
  std::int64_t coeff_range = 5;
  CampaignMode mode = CampaignMode::univariate;
};

/// splitmix64 finalizer; decorrelates per-instance seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic generator with a portable uniform integer draw (the
/// standard distributions are implementation defined).
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Random system for instance `index` of a campaign. Each candidate exponent
/// is kept with probability 1/2 (redrawn until at least two survive) and
/// coefficients are uniform integers in [-coeff_range, coeff_range].
/// Univariate exponents range over 0..max_deg; bivariate ones over
/// {(a, b) : a + b <= max_deg}.
inline std::vector<TropPoly> random_system(const CampaignConfig& cfg,
                                           std::uint64_t index) {
  Prng rng(mix_seed(cfg.seed ^ mix_seed(index + 1)));
  std::vector<Exponent> candidates;
  if (cfg.mode == CampaignMode::univariate) {
    for (std::int64_t k = 0; k <= cfg.max_deg; ++k) candidates.push_back({k});
  } else {
    for (std::int64_t a = 0; a <= cfg.max_deg; ++a) {
      for (std::int64_t b = 0; a + b <= cfg.max_deg; ++b) {
        candidates.push_back({a, b});
      }
    }
  }
  const std::size_t n = cfg.mode == CampaignMode::univariate ? 1 : 2;
  const auto s = rng.uniform(1, cfg.max_s);
  std::vector<TropPoly> system;
  for (std::int64_t j = 0; j < s; ++j) {
    std::vector<Exponent> chosen;
    while (chosen.size() < 2) {
      chosen.clear();
      for (const auto& e : candidates) {
        if (rng.coin()) chosen.push_back(e);
      }
    }
    std::vector<Monomial> terms;
    for (auto& e : chosen) {
      terms.push_back(
          {Rational(rng.uniform(-cfg.coeff_range, cfg.coeff_range)),
           std::move(e)});
    }
    system.emplace_back(n, terms);
  }
  return system;
}

}  // namespace tropdual
