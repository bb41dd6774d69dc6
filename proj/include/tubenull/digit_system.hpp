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
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tubenull {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A digit is an integer d-tuple with coordinates in {0,...,N-1}.
using Digit = std::vector<int>;

enum class SystemErrorKind {
  kDimensionTooSmall,
  kBaseTooSmall,
  kWrongArity,
  kCoordinateOutOfRange,
  kDuplicateDigit,
  kEmptyDigitSet,
  kFullGrid,
};

const char* to_string(SystemErrorKind kind);

class SystemError : public std::invalid_argument {
 public:
  SystemError(SystemErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  SystemErrorKind kind() const { return kind_; }

 private:
  SystemErrorKind kind_;
};

/**
 * The homogeneous IFS x -> (x + i) / N, i in digits, on [0,1]^d.
 *
 * Digits are kept in input order; a word refers to them by index. The set
 * must be a proper subset of the full grid, otherwise the attractor is the
 * whole cube.
 */
class DigitSystem {
 public:
  static DigitSystem create(int d, int N, std::vector<Digit> digits);

  int dimension() const { return d_; }
  int base() const { return N_; }
  std::size_t size() const { return digits_.size(); }
  const std::vector<Digit>& digits() const { return digits_; }
  const Digit& digit(std::size_t index) const { return digits_[index]; }

  /// Index of `digit` in the digit list, or -1.
  int index_of(std::span<const int> digit) const;

  friend bool operator==(const DigitSystem&, const DigitSystem&) = default;

 private:
  DigitSystem(int d, int N, std::vector<Digit> digits)
      : d_(d), N_(N), digits_(std::move(digits)) {}

  int d_ = 2;
  int N_ = 2;
  std::vector<Digit> digits_;
};

/// A finite word over the digit alphabet, stored as digit indices.
/// Symbol 0 is the most significant (it selects the outermost map).
struct Word {
  std::vector<int> symbols;

  int level() const { return static_cast<int>(symbols.size()); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Builds a word from explicit digit vectors; throws if any is not a digit.
Word make_word(const DigitSystem& system, const std::vector<Digit>& digits);

/// Checks that every index is in range and the word is non-empty.
void validate_word(const DigitSystem& system, const Word& word);

/**
 * A point or cube corner on the N^-level grid: coordinate k equals
 * numerators[k] / N^level.
 */
struct GridPoint {
  std::vector<BigInt> numerators;
  int level = 0;

  BigRational coordinate(const DigitSystem& system, std::size_t k) const;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Level-n basic set: corner on the N^-n grid, side N^-n.
struct Cube {
  GridPoint corner;

  int level() const { return corner.level; }
  BigRational side(const DigitSystem& system) const;
  /// Exact containment of `other` in this cube (closed cubes).
  bool contains(const DigitSystem& system, const Cube& other) const;
};

BigInt pow_big(int base, int exponent);

Cube cylinder_cube(const DigitSystem& system, const Word& word);

/// Appends symbols chosen by `next_index` until the word has length `depth`
/// and returns the resulting cube corner.
template <typename IndexSource>
GridPoint extend_to_depth(const DigitSystem& system, const Word& word,
                          int depth, IndexSource&& next_index) {
  Word extended = word;
  while (extended.level() < depth) {
    extended.symbols.push_back(next_index());
  }
  return cylinder_cube(system, extended).corner;
}

/// Random extension of `word` to `depth` digits with uniform symbols;
/// the corner lies within sqrt(d) N^-depth of the attractor.
GridPoint sample_point(const DigitSystem& system, const Word& word, int depth,
                       std::uint64_t seed);

}  // namespace tubenull
