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
#include <span>
#include <vector>

#include "tubenull/digit_system.hpp"
#include "tubenull/entropy_types.hpp"
#include "tubenull/projection.hpp"

namespace tubenull {

struct CertifierConfig {
  int max_iters = 200;         // Newton steps per barrier stage
  double gap_tol = 1e-6;       // certification threshold on delta* and gap
  double target_gap = 1e-11;   // barrier stops once its duality bound is below
  int oracle_resolution = 8;   // grid denominator for the oracle
  std::uint64_t oracle_cap = 2'000'000;  // grid points before subsampling
  std::uint64_t oracle_seed = 0x5eed;
};

/**
 * A direction set V with its entropy gap.
 *
 * delta_star = 1 - g(witness) where g(p) = min_v H_N(residues of p under v).
 * `gap` is an a-posteriori upper bound on max g - g(witness) obtained from a
 * convex combination of linearizations, so every simplex point p satisfies
 * g(p) <= 1 - delta_star + gap.
 */
struct DirectionCertificate {
  std::vector<Direction> V;
  double delta_star = 0;
  ProbVector witness;
  double gap = 0;
  double oracle = 0;
  int oracle_resolution = 0;
  bool certified = false;
};

/// g(p) = min over v of the base-N residue entropy.
double objective(std::span<const ProjectedAlphabet> alphabets,
                 std::span<const double> p);
double objective(const DigitSystem& system, std::span<const Direction> V,
                 std::span<const double> p);

std::vector<ProjectedAlphabet> project_all(const DigitSystem& system,
                                           std::span<const Direction> V);

/// Maximizes g over the digit simplex (log-barrier interior point with Newton
/// steps) and reports delta* with its certified gap and the grid oracle value.
DirectionCertificate delta_star(const DigitSystem& system,
                                std::vector<Direction> V,
                                const CertifierConfig& config = {});

/// Optimizer only; oracle fields left at zero.
DirectionCertificate maximize_objective(const DigitSystem& system,
                                        std::vector<Direction> V,
                                        const CertifierConfig& config = {});

/**
 * Max of g over simplex points with denominator k. When the number of such
 * points exceeds `cap`, evaluates `cap` uniformly random compositions
 * instead. Parallel over points.
 */
double grid_oracle(const DigitSystem& system, std::span<const Direction> V,
                   int resolution, std::uint64_t cap = 2'000'000,
                   std::uint64_t seed = 0x5eed);

/// Serial reference for grid_oracle (exhaustive only).
double grid_oracle_serial(const DigitSystem& system,
                          std::span<const Direction> V, int resolution);

/// Axis directions, then e_i + e_j and e_i - e_j for i < j.
std::vector<Direction> axis_and_diagonal_directions(int d);

/// Primitive sign-canonical directions with max-norm exactly R, sorted by
/// l1 norm then lexicographically.
std::vector<Direction> primitive_directions_of_radius(int d, int R);

/**
 * Greedy direction search: starting from the uniform witness, repeatedly adds
 * the candidate that most lowers g at the current maximizer, re-solving after
 * each addition. Candidates are the axis and diagonal set, then the primitive
 * directions of max-norm 1, 2, ..., R_max. Returns the last certificate, which
 * is uncertified if the candidates ran out.
 */
DirectionCertificate direction_search(const DigitSystem& system, int R_max,
                                      const CertifierConfig& config = {});

}  // namespace tubenull
