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

#include "tubenull/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tubenull {

Direction Direction::create(std::vector<int> v) {
  if (v.empty()) throw std::invalid_argument("direction has no coordinates");
  int g = 0;
  for (int c : v) g = std::gcd(g, c);
  if (g == 0) throw std::invalid_argument("direction must be nonzero");
  if (g != 1) {
    throw std::invalid_argument(
        "direction is not primitive (coordinate gcd " + std::to_string(g) +
        ")");
  }
  auto first = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
  if (*first < 0) {
    for (int& c : v) c = -c;
  }
  return Direction(std::move(v));
}

std::int64_t Direction::l1_norm() const {
  std::int64_t s = 0;
  for (int c : v_) s += std::abs(c);
  return s;
}

std::int64_t Direction::linf_norm() const {
  std::int64_t s = 0;
  for (int c : v_) s = std::max<std::int64_t>(s, std::abs(c));
  return s;
}

double Direction::l2_norm() const {
  double s = 0;
  for (int c : v_) s += double(c) * c;
  return std::sqrt(s);
}

std::string Direction::key() const {
  std::string out;
  for (std::size_t k = 0; k < v_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v_[k]);
  }
  return out;
}

std::int64_t project_digit(std::span<const int> digit, const Direction& v) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < digit.size(); ++k) {
    s += std::int64_t(digit[k]) * v[k];
  }
  return s;
}

int residue_of_digit(std::span<const int> digit, const Direction& v, int N) {
  return euclid_mod(project_digit(digit, v), N);
}

ProjectedAlphabet project_alphabet(const DigitSystem& system,
                                   const Direction& v) {
  if (v.dimension() != system.dimension()) {
    throw std::invalid_argument("direction dimension does not match system");
  }
  ProjectedAlphabet a{v, system.base(), {}, {}, 0, 0, 0, 0, 0, 0};
  for (int c : v.components()) {
    if (c < 0) a.m_v += c;
    else a.M_v += c;
  }
  for (const Digit& digit : system.digits()) {
    const std::int64_t value = project_digit(digit, v);
    a.values.push_back(value);
    a.residues.push_back(euclid_mod(value, system.base()));
  }
  const auto [lo, hi] = std::minmax_element(a.values.begin(), a.values.end());
  a.min_value = *lo;
  a.max_value = *hi;
  a.L1 = std::max(std::abs(*lo), std::abs(*hi));
  a.L = a.L1 * system.base();
  return a;
}

int ProjectedAlphabet::residue_alphabet_size() const {
  return static_cast<int>(std::set<int>(residues.begin(), residues.end()).size());
}

std::vector<int> ProjectedAlphabet::values_per_residue() const {
  std::vector<std::set<std::int64_t>> sets(base);
  for (std::size_t i = 0; i < values.size(); ++i) sets[residues[i]].insert(values[i]);
  std::vector<int> out;
  for (const auto& s : sets) out.push_back(static_cast<int>(s.size()));
  return out;
}

BigInt projected_position(const DigitSystem& system, const Word& word,
                          const Direction& v) {
  BigInt q = 0;
  for (int s : word.symbols) {
    q *= system.base();
    q += project_digit(system.digit(s), v);
  }
  return q;
}

std::pair<BigInt, BigInt> position_range(const ProjectedAlphabet& alphabet,
                                         int n) {
  const BigInt repunit = (pow_big(alphabet.base, n) - 1) / (alphabet.base - 1);
  return {repunit * alphabet.min_value, repunit * alphabet.max_value};
}

BigInt CanonicalForm::value(int N) const {
  BigInt q = absorber;
  for (int digit : digits) {
    q *= N;
    q += digit;
  }
  return q;
}

CanonicalForm canonicalize(const BigInt& q, int n,
                           const ProjectedAlphabet& alphabet) {
  if (n < 1) throw std::invalid_argument("level must be at least 1");
  const auto [lo, hi] = position_range(alphabet, n);
  if (q < lo || q > hi) {
    throw std::out_of_range("projected position outside the attainable range");
  }
  const int N = alphabet.base;
  CanonicalForm form;
  form.digits.assign(n - 1, 0);
  BigInt rest = q;
  for (int k = n - 2; k >= 0; --k) {
    BigInt r = rest % N;  // truncating; fix up for negative values
    if (r < 0) r += N;
    form.digits[k] = static_cast<int>(r);
    rest = (rest - r) / N;
  }
  form.absorber = rest;
  return form;
}

}  // namespace tubenull
