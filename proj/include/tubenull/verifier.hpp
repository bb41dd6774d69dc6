// Copyright 2026 The Tubenull Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tubenull/cover_builder.hpp"

namespace tubenull {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string details;
};

/**
 * Outcome of one or more verification passes. Every check reads only the
 * serialized cover JSON; none of the builder's data structures are reused.
 */
struct VerificationReport {
  std::vector<CheckResult> checks;
  std::uint64_t points_tested = 0;
  std::uint64_t point_failures = 0;
  std::uint64_t words_checked = 0;
  std::string recomputed_width;  // "p/q", empty when not computed
  std::uint64_t seed = 0;

  bool valid() const;
  void merge(const VerificationReport& other);
  nlohmann::json to_json() const;
};

inline constexpr std::uint64_t kContainmentCap = 1ULL << 24;

/// Re-enumerates every level-n word, recomputes its direction and checks that
/// all 2^d cube corners lie in a listed slab of that direction.
VerificationReport verify_containment(const nlohmann::json& cover,
                                      std::uint64_t word_cap = kContainmentCap);

/// Random depth-`depth` points of the attractor (or of the full cube when
/// `full_cube`, a negative control) must lie in some slab, and for d >= 3
/// inside the tube of that slab's transverse cell.
VerificationReport verify_sampling(const nlohmann::json& cover, std::uint64_t samples,
                                   int depth, std::uint64_t seed, bool full_cube = false);

/// Recomputes tube counts and the total width from the slab lists (exact
/// mode) or slab counts (aggregated mode) and compares bit-exactly.
VerificationReport verify_width(const nlohmann::json& cover);

/// Containment, width and sampling (reported as skipped when samples == 0).
VerificationReport verify_all(const nlohmann::json& cover, std::uint64_t samples,
                              int depth, std::uint64_t seed);

struct DecayRow {
  int n;
  BigRational width;
  double width_float;
  double ratio;  // W(n) / W(n-1); 0 for the first row
  double bound;  // C (n+1)^K N^(-n delta*)
  bool holds;
};

/// Aggregated widths for n in [n_lo, n_hi] against the explicit decay bound.
std::vector<DecayRow> decay_report(const DigitSystem& system,
                                   const DirectionCertificate& cert, int n_lo, int n_hi,
                                   const CoverConfig& config = {});

}  // namespace tubenull
