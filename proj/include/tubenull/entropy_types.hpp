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
#include <functional>
#include <span>
#include <vector>

#include "tubenull/digit_system.hpp"
#include "tubenull/projection.hpp"

namespace tubenull {

/// Probability weights indexed like the system's digit list.
using ProbVector = std::vector<double>;
/// Weights indexed by residue 0..N-1.
using ResidueDistribution = std::vector<double>;

/// Throws unless weights are non-negative and sum to 1 within `tolerance`.
void validate_prob_vector(std::span<const double> p, double tolerance = 1e-12);

ProbVector uniform_prob(std::size_t size);

/// Shannon entropy of `dist` with logarithm base N; 0 log 0 = 0. The
/// distribution need not be normalized to N symbols, only to total 1.
double entropy_N(std::span<const double> dist, int N);

/// Entropy of the normalized count vector, base N.
double entropy_N(std::span<const std::int64_t> counts, int N);

ResidueDistribution residue_distribution(const ProjectedAlphabet& alphabet,
                                         std::span<const double> p);

/// Occurrence counts of a word's symbols.
struct EmpiricalType {
  std::vector<std::int64_t> counts;

  std::int64_t total() const;
  std::vector<double> frequencies() const;
  friend bool operator==(const EmpiricalType&, const EmpiricalType&) = default;
};

/// Counts of digit indices.
EmpiricalType empirical_type(const DigitSystem& system, const Word& word);
/// Counts of residues (w_k . v) mod N.
EmpiricalType residue_type(const ProjectedAlphabet& alphabet, const Word& word);
/// Pushes a digit-indexed type through the residue map.
EmpiricalType push_to_residues(const ProjectedAlphabet& alphabet,
                               const EmpiricalType& digit_type);

class TypeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultTypeCap = 100'000'000;

/// binomial(n + m - 1, m - 1), saturating at UINT64_MAX.
std::uint64_t type_count(int n, int m);

/// Visits every count vector of total n over m symbols in lexicographic
/// order (first symbol largest first). Throws TypeCapExceeded when the
/// number of types exceeds `cap`.
void for_each_type(int n, int m,
                   const std::function<void(std::span<const std::int64_t>)>& visit,
                   std::uint64_t cap = kDefaultTypeCap);

std::vector<EmpiricalType> enumerate_types(int n, int m,
                                           std::uint64_t cap = kDefaultTypeCap);

/// Multinomial n! / prod counts!.
BigInt type_class_size(std::span<const std::int64_t> counts);
inline BigInt type_class_size(const EmpiricalType& t) {
  return type_class_size(t.counts);
}

/// Multinomial as unsigned 128-bit; caller guarantees it fits.
unsigned __int128 multinomial_u128(std::span<const std::int64_t> counts);

/**
 * Two-sided type-class bound in base-N form:
 *   (n+1)^-m N^(n H_N(t)) <= |T_n(t)| <= N^(n H_N(t)),
 * m the alphabet size. Values are natural logs of the three quantities.
 */
struct TypeClassBounds {
  double log_lower;
  double log_size;
  double log_upper;
  bool holds(double tolerance = 1e-9) const {
    return log_lower <= log_size + tolerance && log_size <= log_upper + tolerance;
  }
};

TypeClassBounds type_class_bounds(const EmpiricalType& t, int N);

}  // namespace tubenull
