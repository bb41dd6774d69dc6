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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubenull/digit_system.hpp"
#include "tubenull/direction_certifier.hpp"
#include "tubenull/entropy_types.hpp"
#include "tubenull/projection.hpp"

namespace tubenull {

inline constexpr double kDefaultSlack = 1e-9;

/// Slab {x : (Q + m_v) / N^n <= x.v <= (Q + M_v) / N^n}.
struct Slab {
  Direction direction;
  int level = 0;
  BigInt position{};   // Q
  BigInt lower{};      // Q + m_v, in units of N^-n
  BigInt upper{};      // Q + M_v, in units of N^-n
  BigRational width_bound{};  // |v|_1 / N^n
  double euclidean_width = 0;  // |v|_1 / (|v|_2 N^n)
};

Slab slab_for(const DigitSystem& system, const Word& word, const Direction& v);

/**
 * Cutting rule for one slab direction in dimension d >= 3.
 *
 * The slab is a graph over the coordinates other than `solve_axis` (the
 * largest |v_j|). The line runs along `line_axis` inside the slab; the
 * remaining d-2 coordinates are cut into cells of side h = |v|_1 / N^n. A
 * point of the slab in cell c lies within width/2 of the cell's axis line,
 * where width^2 = X h^2 and
 *   X = (d - 2) + ((1 + sum_{i transverse} |v_i|) / |v_solve|)^2.
 * In d = 2 the slab is itself a tube of width h.
 */
struct TubeRule {
  int solve_axis = 0;
  int line_axis = 1;
  std::vector<int> transverse;
  BigRational width_factor_sq;  // X
};

TubeRule tube_rule(const Direction& v);

struct TubeSet {
  BigInt count;                // tubes per slab
  BigRational cell_side;       // h
  BigRational width_sq;        // (tube width)^2 = X h^2
  BigRational contribution;    // count * width^(d-1), rounded up when irrational
};

/// Tubes covering slab intersected with the unit cube.
TubeSet subdivide_slab(const Slab& slab, int d);

/// Rational r with r >= sqrt(x), within 2^-bits of it.
BigRational sqrt_upper(const BigRational& x, int bits = 24);

/// Per-slab contribution to sum of tube widths^(d-1) for direction v at level n.
TubeSet tubes_per_slab(const Direction& v, int d, int N, int n);

enum class CoverMode { kExact, kAggregated };

const char* to_string(CoverMode mode);
CoverMode cover_mode_from_string(const std::string& name);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoDirection : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CoverConfig {
  double slack = kDefaultSlack;
  std::uint64_t word_cap = 1ULL << 28;  // exact mode
  std::uint64_t type_cap = kDefaultTypeCap;
  std::uint64_t bitset_cap = 1ULL << 30;  // bits per direction
};

/// Entropy threshold 1 - delta* + slack used for assignment.
double assignment_threshold(const DirectionCertificate& cert, double slack);

/// Index into cert.V of the first direction whose residue entropy for the
/// given residue counts is at most `threshold`; throws NoDirection if none.
int assign_direction(std::span<const ProjectedAlphabet> alphabets,
                     const EmpiricalType& digit_type, double threshold);

Direction assign_direction(const DigitSystem& system, const Word& word,
                           const DirectionCertificate& cert,
                           double slack = kDefaultSlack);

struct DirectionCover {
  Direction direction;
  BigInt word_count{};
  BigInt slab_count{};
  std::vector<BigInt> positions{};  // exact mode: sorted distinct Q
  // Aggregated-mode ingredients of slab_count = min of the three.
  BigInt range_size{};
  std::optional<BigInt> projected_bound{};
  TubeSet tubes{};
};

struct CoverCertificate {
  DigitSystem system;
  DirectionCertificate directions;
  int level = 1;
  CoverMode mode = CoverMode::kExact;
  double slack = kDefaultSlack;
  std::vector<DirectionCover> per_direction;
  BigInt tube_count;
  BigRational total_width_bound;

  double total_width_float() const;
};

/// Builds the level-n cover. Exact mode enumerates every word in parallel;
/// aggregated mode iterates digit types and bounds slab counts.
CoverCertificate build_cover(const DigitSystem& system,
                             const DirectionCertificate& cert, int n,
                             CoverMode mode, const CoverConfig& config = {});

/// Serial exact-mode reference built from the word-level primitives.
CoverCertificate build_cover_serial(const DigitSystem& system,
                                    const DirectionCertificate& cert, int n,
                                    const CoverConfig& config = {});

/// Aggregated word counts per direction (OpenMP over digit-class types).
std::vector<BigInt> aggregated_word_counts(const DigitSystem& system,
                                           const DirectionCertificate& cert, int n,
                                           double slack = kDefaultSlack,
                                           std::uint64_t type_cap = kDefaultTypeCap);

/// Serial aggregated word counts per direction, enumerating digit types in
/// lexicographic order (reference for the parallel kernel).
std::vector<BigInt> aggregated_word_counts_serial(const DigitSystem& system,
                                                  const DirectionCertificate& cert,
                                                  int n, double slack = kDefaultSlack);

/// Sum over slabs of the float euclidean widths^(d-1) (d = 2), or of the
/// float tube contributions (d >= 3).
double float_total_width(const CoverCertificate& cover);

/// Smallest n in [1, max_level] whose aggregated width bound is below eps.
struct LevelChoice {
  int level;
  BigRational width;
};
LevelChoice required_level(const DigitSystem& system,
                           const DirectionCertificate& cert, double epsilon,
                           int max_level = 24, const CoverConfig& config = {});

/**
 * Constants of the decay inequality W(n) <= C (n+1)^K N^(-n delta*).
 *
 * multiplicity = max_v (|v|_1 N + 1), the number of values the absorbing
 * symbol of a canonical representative can take; K = max_v residue alphabet
 * size; C = |V| * multiplicity * max_v 2^(d-2) sqrt(X_v)^(d-1) |v|_1 (which is
 * |V| * multiplicity * max |v|_1 in the plane).
 */
struct DecayConstants {
  double C = 0;
  int K = 0;
  double multiplicity = 0;

  double bound(int n, int N, double delta_star) const;
};

DecayConstants decay_constants(const DigitSystem& system,
                               const DirectionCertificate& cert);

}  // namespace tubenull
