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

#include "tubenull/digit_system.hpp"

namespace tubenull {

/// Primitive integer direction with its first nonzero coordinate positive.
class Direction {
 public:
  /// Rejects the zero vector and non-primitive vectors; flips the sign of
  /// vectors whose first nonzero coordinate is negative.
  static Direction create(std::vector<int> v);

  const std::vector<int>& components() const { return v_; }
  int dimension() const { return static_cast<int>(v_.size()); }
  int operator[](std::size_t k) const { return v_[k]; }

  std::int64_t l1_norm() const;
  std::int64_t linf_norm() const;
  double l2_norm() const;
  /// "1,-1" style key used in certificates.
  std::string key() const;

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction&, const Direction&) = default;

 private:
  explicit Direction(std::vector<int> v) : v_(std::move(v)) {}
  std::vector<int> v_;
};

/// The projected digit values i.v for one direction.
struct ProjectedAlphabet {
  Direction direction;
  int base = 2;
  std::vector<std::int64_t> values;  // per digit index
  std::vector<int> residues;         // (i.v) mod N, per digit index
  std::int64_t m_v = 0;              // sum of negative coordinates of v
  std::int64_t M_v = 0;              // sum of positive coordinates of v
  std::int64_t min_value = 0;        // min i.v over digits
  std::int64_t max_value = 0;        // max i.v over digits
  std::int64_t L1 = 0;               // max |i.v| over digits
  std::int64_t L = 0;                // L1 * N

  /// Number of distinct residues hit by the digits.
  int residue_alphabet_size() const;
  /// Number of distinct projected values with residue r, for each r.
  std::vector<int> values_per_residue() const;
};

ProjectedAlphabet project_alphabet(const DigitSystem& system,
                                   const Direction& v);

std::int64_t project_digit(std::span<const int> digit, const Direction& v);

/// Euclidean remainder of i.v modulo N, always in {0,...,N-1}.
int residue_of_digit(std::span<const int> digit, const Direction& v, int N);

inline int euclid_mod(std::int64_t a, int N) {
  std::int64_t r = a % N;
  return static_cast<int>(r < 0 ? r + N : r);
}

/// Q(w) = sum_k (w_k . v) N^(n-k); the cylinder corner projects to Q / N^n.
BigInt projected_position(const DigitSystem& system, const Word& word,
                          const Direction& v);

/// Inclusive range of Q over all level-n words:
/// [min_value, max_value] * (N^n - 1) / (N - 1).
std::pair<BigInt, BigInt> position_range(const ProjectedAlphabet& alphabet,
                                         int n);

/**
 * Representative of a projected position in {absorber} x Sigma^(n-1).
 *
 * The absorbing symbol carries the most significant weight N^(n-1) and the
 * remaining n-1 symbols are ordinary base-N digits, so
 *   q = absorber * N^(n-1) + sum_k digits[k] * N^(n-2-k).
 * |absorber| <= L = L1 * N for every attainable q.
 */
struct CanonicalForm {
  BigInt absorber;
  std::vector<int> digits;

  BigInt value(int N) const;
};

CanonicalForm canonicalize(const BigInt& q, int n,
                           const ProjectedAlphabet& alphabet);

}  // namespace tubenull
