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

#include "tubenull/entropy_types.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tubenull {

void validate_prob_vector(std::span<const double> p, double tolerance) {
  if (p.empty()) throw std::invalid_argument("probability vector is empty");
  double sum = 0;
  for (double w : p) {
    if (!(w >= 0) || !std::isfinite(w)) {
      throw std::invalid_argument("probability weights must be non-negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw std::invalid_argument("probability weights must sum to 1");
  }
}

ProbVector uniform_prob(std::size_t size) {
  return ProbVector(size, 1.0 / static_cast<double>(size));
}

double entropy_N(std::span<const double> dist, int N) {
  double h = 0;
  for (double q : dist) {
    if (q > 0) h -= q * std::log(q);
  }
  return h / std::log(static_cast<double>(N));
}

double entropy_N(std::span<const std::int64_t> counts, int N) {
  std::int64_t n = 0;
  for (auto c : counts) n += c;
  if (n == 0) return 0;
  // H = log n - (1/n) sum c log c
  double s = 0;
  for (auto c : counts) {
    if (c > 0) s += double(c) * std::log(double(c));
  }
  return (std::log(double(n)) - s / double(n)) / std::log(double(N));
}

ResidueDistribution residue_distribution(const ProjectedAlphabet& alphabet,
                                         std::span<const double> p) {
  if (p.size() != alphabet.residues.size()) {
    throw std::invalid_argument("probability vector does not match digits");
  }
  ResidueDistribution q(alphabet.base, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) q[alphabet.residues[i]] += p[i];
  return q;
}

std::int64_t EmpiricalType::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::vector<double> EmpiricalType::frequencies() const {
  const double n = static_cast<double>(total());
  std::vector<double> f;
  for (auto c : counts) f.push_back(double(c) / n);
  return f;
}

EmpiricalType empirical_type(const DigitSystem& system, const Word& word) {
  EmpiricalType t{std::vector<std::int64_t>(system.size(), 0)};
  for (int s : word.symbols) ++t.counts[s];
  return t;
}

EmpiricalType residue_type(const ProjectedAlphabet& alphabet, const Word& word) {
  EmpiricalType t{std::vector<std::int64_t>(alphabet.base, 0)};
  for (int s : word.symbols) ++t.counts[alphabet.residues[s]];
  return t;
}

EmpiricalType push_to_residues(const ProjectedAlphabet& alphabet,
                               const EmpiricalType& digit_type) {
  EmpiricalType t{std::vector<std::int64_t>(alphabet.base, 0)};
  for (std::size_t i = 0; i < digit_type.counts.size(); ++i) {
    t.counts[alphabet.residues[i]] += digit_type.counts[i];
  }
  return t;
}

std::uint64_t type_count(int n, int m) {
  // binomial(n + m - 1, m - 1) with saturation.
  const int k = m - 1;
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n + i) / static_cast<unsigned>(i);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(c);
}

void for_each_type(int n, int m,
                   const std::function<void(std::span<const std::int64_t>)>& visit,
                   std::uint64_t cap) {
  if (n < 1 || m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
  if (type_count(n, m) > cap) {
    throw TypeCapExceeded("type enumeration of " + std::to_string(type_count(n, m)) +
                          " types exceeds the cap");
  }
  std::vector<std::int64_t> counts(m, 0);
  counts[0] = n;
  while (true) {
    visit(counts);
    // Next composition: move one unit from the last nonzero non-final slot.
    int j = m - 2;
    while (j >= 0 && counts[j] == 0) --j;
    if (j < 0) break;
    --counts[j];
    const std::int64_t tail = counts[m - 1];
    counts[m - 1] = 0;
    counts[j + 1] = tail + 1;
  }
}

std::vector<EmpiricalType> enumerate_types(int n, int m, std::uint64_t cap) {
  std::vector<EmpiricalType> out;
  for_each_type(
      n, m,
      [&](std::span<const std::int64_t> c) {
        out.push_back(EmpiricalType{{c.begin(), c.end()}});
      },
      cap);
  return out;
}

BigInt type_class_size(std::span<const std::int64_t> counts) {
  // Product of binomials C(prefix, c).
  BigInt result = 1;
  std::int64_t prefix = 0;
  for (auto c : counts) {
    for (std::int64_t i = 1; i <= c; ++i) {
      result *= prefix + i;
      result /= i;
    }
    prefix += c;
  }
  return result;
}

unsigned __int128 multinomial_u128(std::span<const std::int64_t> counts) {
  unsigned __int128 result = 1;
  std::int64_t prefix = 0;
  for (auto c : counts) {
    // result * C(prefix + c, c), built incrementally; each step stays integral.
    for (std::int64_t i = 1; i <= c; ++i) {
      result = result * static_cast<unsigned __int128>(prefix + i) /
               static_cast<unsigned __int128>(i);
    }
    prefix += c;
  }
  return result;
}

TypeClassBounds type_class_bounds(const EmpiricalType& t, int N) {
  const double n = static_cast<double>(t.total());
  const double m = static_cast<double>(t.counts.size());
  const double log_n_h = n * entropy_N(t.counts, N) * std::log(double(N));
  double log_size = std::lgamma(n + 1);
  for (auto c : t.counts) log_size -= std::lgamma(double(c) + 1);
  return {log_n_h - m * std::log(n + 1), log_size, log_n_h};
}

}  // namespace tubenull
