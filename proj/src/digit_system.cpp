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

#include "tubenull/digit_system.hpp"

#include <algorithm>
#include <set>

#include "tubenull/random.hpp"

namespace tubenull {

const char* to_string(SystemErrorKind kind) {
  switch (kind) {
    case SystemErrorKind::kDimensionTooSmall: return "DimensionTooSmall";
    case SystemErrorKind::kBaseTooSmall: return "BaseTooSmall";
    case SystemErrorKind::kWrongArity: return "WrongArity";
    case SystemErrorKind::kCoordinateOutOfRange: return "CoordinateOutOfRange";
    case SystemErrorKind::kDuplicateDigit: return "DuplicateDigit";
    case SystemErrorKind::kEmptyDigitSet: return "EmptyDigitSet";
    case SystemErrorKind::kFullGrid: return "FullGrid";
  }
  return "Unknown";
}

DigitSystem DigitSystem::create(int d, int N, std::vector<Digit> digits) {
  if (d < 2) {
    throw SystemError(SystemErrorKind::kDimensionTooSmall,
                      "dimension must be at least 2, got " + std::to_string(d));
  }
  if (N < 2) {
    throw SystemError(SystemErrorKind::kBaseTooSmall,
                      "base must be at least 2, got " + std::to_string(N));
  }
  if (digits.empty()) {
    throw SystemError(SystemErrorKind::kEmptyDigitSet, "digit set is empty");
  }
  std::set<Digit> seen;
  for (const Digit& digit : digits) {
    if (static_cast<int>(digit.size()) != d) {
      throw SystemError(SystemErrorKind::kWrongArity,
                        "digit has " + std::to_string(digit.size()) +
                            " coordinates, expected " + std::to_string(d));
    }
    for (int c : digit) {
      if (c < 0 || c >= N) {
        throw SystemError(SystemErrorKind::kCoordinateOutOfRange,
                          "digit coordinate " + std::to_string(c) +
                              " outside {0,...," + std::to_string(N - 1) + "}");
      }
    }
    if (!seen.insert(digit).second) {
      throw SystemError(SystemErrorKind::kDuplicateDigit, "duplicate digit");
    }
  }
  // |digits| < N^d; compare without overflowing.
  std::size_t grid = 1;
  bool grid_exceeds = false;
  for (int k = 0; k < d && !grid_exceeds; ++k) {
    grid *= static_cast<std::size_t>(N);
    grid_exceeds = grid > digits.size();
  }
  if (!grid_exceeds && grid == digits.size()) {
    throw SystemError(SystemErrorKind::kFullGrid,
                      "digit set is the full grid; the attractor is the unit "
                      "cube, which is not tube-null");
  }
  return DigitSystem(d, N, std::move(digits));
}

int DigitSystem::index_of(std::span<const int> digit) const {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (std::equal(digits_[i].begin(), digits_[i].end(), digit.begin(),
                   digit.end())) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

Word make_word(const DigitSystem& system, const std::vector<Digit>& digits) {
  Word word;
  for (const Digit& digit : digits) {
    int index = system.index_of(digit);
    if (index < 0) throw std::invalid_argument("symbol is not a system digit");
    word.symbols.push_back(index);
  }
  validate_word(system, word);
  return word;
}

void validate_word(const DigitSystem& system, const Word& word) {
  if (word.symbols.empty()) throw std::invalid_argument("word must be non-empty");
  for (int s : word.symbols) {
    if (s < 0 || s >= static_cast<int>(system.size())) {
      throw std::invalid_argument("word symbol index out of range");
    }
  }
}

BigInt pow_big(int base, int exponent) {
  BigInt result = 1;
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

BigRational GridPoint::coordinate(const DigitSystem& system,
                                  std::size_t k) const {
  return BigRational(numerators[k], pow_big(system.base(), level));
}

BigRational Cube::side(const DigitSystem& system) const {
  return BigRational(BigInt(1), pow_big(system.base(), level()));
}

bool Cube::contains(const DigitSystem& system, const Cube& other) const {
  if (other.level() < level()) return false;
  const BigInt scale = pow_big(system.base(), other.level() - level());
  for (std::size_t k = 0; k < corner.numerators.size(); ++k) {
    const BigInt lo = corner.numerators[k] * scale;
    const BigInt hi = lo + scale;
    const BigInt& o = other.corner.numerators[k];
    if (o < lo || o + 1 > hi) return false;
  }
  return true;
}

Cube cylinder_cube(const DigitSystem& system, const Word& word) {
  const int d = system.dimension();
  Cube cube;
  cube.corner.numerators.assign(d, BigInt(0));
  cube.corner.level = word.level();
  // Horner: corner * N^n = sum_k symbol_k N^(n-k).
  for (int s : word.symbols) {
    const Digit& digit = system.digit(s);
    for (int k = 0; k < d; ++k) {
      BigInt& c = cube.corner.numerators[k];
      c *= system.base();
      c += digit[k];
    }
  }
  return cube;
}

GridPoint sample_point(const DigitSystem& system, const Word& word, int depth,
                       std::uint64_t seed) {
  if (depth < word.level()) {
    throw std::invalid_argument("sample depth is below the word level");
  }
  CounterRng rng(seed, 0);
  return extend_to_depth(system, word, depth, [&] {
    return static_cast<int>(rng.below(system.size()));
  });
}

}  // namespace tubenull
