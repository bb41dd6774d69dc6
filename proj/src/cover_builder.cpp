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

#include "tubenull/cover_builder.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace tubenull {
namespace {

using u128 = unsigned __int128;

BigInt to_big(u128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) + BigInt(static_cast<std::uint64_t>(x));
}

BigRational pow_rational(const BigRational& x, int e) {
  BigRational r = 1;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

BigInt isqrt(const BigInt& a) {
  if (a <= 0) return 0;
  return boost::multiprecision::sqrt(a);
}

// Entropies of residue counts via a c log c table.
class CountEntropy {
 public:
  CountEntropy(int n, int N) : table_(n + 1, 0.0), n_(n) {
    for (int c = 1; c <= n; ++c) table_[c] = c * std::log(double(c));
    log_n_ = std::log(double(n));
    inv_log_base_ = 1.0 / std::log(double(N));
  }

  template <typename Counts>
  double operator()(const Counts& counts, int size) const {
    double s = 0;
    for (int r = 0; r < size; ++r) s += table_[counts[r]];
    return (log_n_ - s / n_) * inv_log_base_;
  }

 private:
  std::vector<double> table_;
  int n_;
  double log_n_ = 0;
  double inv_log_base_ = 0;
};

struct DirectionData {
  std::vector<int> residues;
  std::vector<std::int64_t> values;
  std::int64_t q_min = 0;
  std::uint64_t range = 0;  // number of attainable positions
};

// Shared bitset of attained positions with atomic updates.
class PositionSet {
 public:
  explicit PositionSet(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}
  void set(std::uint64_t bit) {
    std::atomic_ref<std::uint64_t> w(words_[bit >> 6]);
    w.fetch_or(std::uint64_t{1} << (bit & 63), std::memory_order_relaxed);
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int b = __builtin_ctzll(w);
        f(std::uint64_t(i) * 64 + b);
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};


double log2_count(std::size_t alphabet, int n) {
  return n * std::log2(double(alphabet));
}

CoverCertificate make_shell(const DigitSystem& system,
                            const DirectionCertificate& cert, int n,
                            CoverMode mode, double slack) {
  if (!cert.certified) {
    throw std::invalid_argument("direction certificate is not certified");
  }
  if (n < 1) throw std::invalid_argument("level must be at least 1");
  CoverCertificate cover{system, cert, n, mode, slack, {}, 0, 0};
  for (const auto& v : cert.V) {
    DirectionCover dc{.direction = v};
    dc.tubes = tubes_per_slab(v, system.dimension(), system.base(), n);
    const auto alphabet = project_alphabet(system, v);
    const auto [lo, hi] = position_range(alphabet, n);
    dc.range_size = hi - lo + 1;
    cover.per_direction.push_back(std::move(dc));
  }
  return cover;
}

void finish(CoverCertificate& cover) {
  cover.tube_count = 0;
  cover.total_width_bound = 0;
  for (const auto& dc : cover.per_direction) {
    cover.tube_count += dc.slab_count * dc.tubes.count;
    cover.total_width_bound += BigRational(dc.slab_count) * dc.tubes.contribution;
  }
}

}  // namespace

Slab slab_for(const DigitSystem& system, const Word& word, const Direction& v) {
  validate_word(system, word);
  const auto alphabet = project_alphabet(system, v);
  Slab s{.direction = v};
  s.level = word.level();
  s.position = projected_position(system, word, v);
  s.lower = s.position + alphabet.m_v;
  s.upper = s.position + alphabet.M_v;
  const BigInt scale = pow_big(system.base(), s.level);
  s.width_bound = BigRational(BigInt(v.l1_norm()), scale);
  s.euclidean_width = double(v.l1_norm()) / (v.l2_norm() * std::pow(double(system.base()), s.level));
  return s;
}

TubeRule tube_rule(const Direction& v) {
  const int d = v.dimension();
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(v[a]) > std::abs(v[b]);
  });
  TubeRule rule;
  rule.solve_axis = order[0];
  rule.line_axis = order[1];
  std::int64_t transverse_l1 = 0;
  for (int k = 2; k < d; ++k) {
    rule.transverse.push_back(order[k]);
    transverse_l1 += std::abs(v[order[k]]);
  }
  std::sort(rule.transverse.begin(), rule.transverse.end());
  const BigRational ratio(BigInt(1 + transverse_l1), BigInt(std::abs(v[rule.solve_axis])));
  rule.width_factor_sq = BigRational(d - 2) + ratio * ratio;
  return rule;
}

BigRational sqrt_upper(const BigRational& x, int bits) {
  if (x <= 0) return 0;
  const BigInt scale = BigInt(1) << (2 * bits);
  // a = ceil(x * 4^bits)
  const BigInt num = boost::multiprecision::numerator(x) * scale;
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt a = num / den;
  if (a * den < num) a += 1;
  BigInt r = isqrt(a);
  if (r * r < a) r += 1;
  return BigRational(r, BigInt(1) << bits);
}

namespace {

// Tubes for a slab of direction v whose cell side is h = |v|_1 / N^n.
TubeSet tubes_from_side(const Direction& v, int d, const BigRational& h) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  TubeSet t;
  t.cell_side = h;
  if (d == 2) {
    t.count = 1;
    t.width_sq = h * h;
    t.contribution = h;
    return t;
  }
  const TubeRule rule = tube_rule(v);
  // ceil(1 / h) cells per transverse axis.
  const BigInt num = boost::multiprecision::numerator(h);
  const BigInt den = boost::multiprecision::denominator(h);
  BigInt per_axis = den / num;
  if (per_axis * num < den) per_axis += 1;
  t.count = 1;
  for (int k = 0; k < d - 2; ++k) t.count *= per_axis;
  t.width_sq = rule.width_factor_sq * h * h;
  BigRational width_pow;
  if ((d - 1) % 2 == 0) {
    width_pow = pow_rational(t.width_sq, (d - 1) / 2);
  } else {
    width_pow = pow_rational(t.width_sq, (d - 2) / 2) * sqrt_upper(rule.width_factor_sq) * h;
  }
  t.contribution = BigRational(t.count) * width_pow;
  return t;
}

}  // namespace

TubeSet tubes_per_slab(const Direction& v, int d, int N, int n) {
  return tubes_from_side(v, d, BigRational(BigInt(v.l1_norm()), pow_big(N, n)));
}

TubeSet subdivide_slab(const Slab& slab, int d) {
  return tubes_from_side(slab.direction, d, slab.width_bound);
}

const char* to_string(CoverMode mode) {
  return mode == CoverMode::kExact ? "exact" : "aggregated";
}

CoverMode cover_mode_from_string(const std::string& name) {
  if (name == "exact") return CoverMode::kExact;
  if (name == "aggregated") return CoverMode::kAggregated;
  throw std::invalid_argument("unknown cover mode '" + name + "'");
}

double assignment_threshold(const DirectionCertificate& cert, double slack) {
  return 1.0 - cert.delta_star + slack;
}

int assign_direction(std::span<const ProjectedAlphabet> alphabets,
                     const EmpiricalType& digit_type, double threshold) {
  for (std::size_t v = 0; v < alphabets.size(); ++v) {
    const EmpiricalType r = push_to_residues(alphabets[v], digit_type);
    if (entropy_N(std::span<const std::int64_t>(r.counts), alphabets[v].base) <= threshold) {
      return static_cast<int>(v);
    }
  }
  throw NoDirection("no direction has residue entropy below the threshold; "
                    "the direction certificate is unsound");
}

Direction assign_direction(const DigitSystem& system, const Word& word,
                           const DirectionCertificate& cert, double slack) {
  validate_word(system, word);
  const auto alphabets = project_all(system, cert.V);
  return cert.V[assign_direction(alphabets, empirical_type(system, word),
                                 assignment_threshold(cert, slack))];
}

double CoverCertificate::total_width_float() const {
  return static_cast<double>(total_width_bound);
}

namespace {

CoverCertificate build_exact(const DigitSystem& system,
                             const DirectionCertificate& cert, int n,
                             const CoverConfig& config) {
  CoverCertificate cover = make_shell(system, cert, n, CoverMode::kExact, config.slack);
  const int m = static_cast<int>(system.size());
  const int N = system.base();
  const int k = static_cast<int>(cert.V.size());
  if (log2_count(m, n) > std::log2(double(config.word_cap))) {
    throw CapExceeded("exact mode needs " + std::to_string(m) + "^" + std::to_string(n) +
                      " words, above the cap; use aggregated mode");
  }
  if (n * std::log2(double(N)) > 60) {
    throw CapExceeded("exact mode positions exceed 64-bit range; use aggregated mode");
  }

  std::vector<DirectionData> dirs(k);
  for (int v = 0; v < k; ++v) {
    const auto a = project_alphabet(system, cert.V[v]);
    dirs[v].residues = a.residues;
    dirs[v].values = a.values;
    const auto [lo, hi] = position_range(a, n);
    dirs[v].q_min = static_cast<std::int64_t>(lo);
    dirs[v].range = static_cast<std::uint64_t>(hi - lo + 1);
    if (dirs[v].range > config.bitset_cap) {
      throw CapExceeded("position range exceeds the bitset cap; use aggregated mode");
    }
  }
  std::vector<PositionSet> seen;
  for (int v = 0; v < k; ++v) seen.emplace_back(dirs[v].range);

  const double threshold = assignment_threshold(cert, config.slack);
  const CountEntropy entropy(n, N);

  int prefix = 0;
  std::uint64_t tasks = 1;
  while (prefix < n && tasks < 512) {
    tasks *= static_cast<std::uint64_t>(m);
    ++prefix;
  }

  std::vector<std::uint64_t> word_counts(k, 0);
  bool failed = false;

#pragma omp parallel
  {
    std::vector<std::uint64_t> local_counts(k, 0);
    // counts[depth][v * N + r], positions[depth][v]
    std::vector<std::vector<int>> counts(n + 1, std::vector<int>(k * N, 0));
    std::vector<std::vector<std::int64_t>> pos(n + 1, std::vector<std::int64_t>(k, 0));
    bool local_failed = false;

    auto leaf = [&](int depth) {
      for (int v = 0; v < k; ++v) {
        if (entropy(&counts[depth][v * N], N) <= threshold) {
          ++local_counts[v];
          seen[v].set(static_cast<std::uint64_t>(pos[depth][v] - dirs[v].q_min));
          return;
        }
      }
      local_failed = true;
    };

    auto push = [&](int depth, int symbol) {
      counts[depth + 1] = counts[depth];
      for (int v = 0; v < k; ++v) {
        ++counts[depth + 1][v * N + dirs[v].residues[symbol]];
        pos[depth + 1][v] = pos[depth][v] * N + dirs[v].values[symbol];
      }
    };

    auto dfs = [&](auto&& self, int depth) -> void {
      if (depth == n) {
        leaf(depth);
        return;
      }
      for (int s = 0; s < m; ++s) {
        push(depth, s);
        self(self, depth + 1);
      }
    };

#pragma omp for schedule(dynamic, 1)
    for (std::int64_t task = 0; task < static_cast<std::int64_t>(tasks); ++task) {
      std::uint64_t code = static_cast<std::uint64_t>(task);
      std::vector<int> symbols(prefix);
      for (int j = prefix - 1; j >= 0; --j) {
        symbols[j] = static_cast<int>(code % m);
        code /= m;
      }
      for (int j = 0; j < prefix; ++j) push(j, symbols[j]);
      dfs(dfs, prefix);
    }

#pragma omp critical
    {
      for (int v = 0; v < k; ++v) word_counts[v] += local_counts[v];
      failed = failed || local_failed;
    }
  }
  if (failed) {
    throw NoDirection("a word has no low-entropy direction; the certificate is unsound");
  }

  for (int v = 0; v < k; ++v) {
    auto& dc = cover.per_direction[v];
    dc.word_count = word_counts[v];
    seen[v].for_each([&](std::uint64_t bit) {
      dc.positions.push_back(BigInt(dirs[v].q_min) + BigInt(bit));
    });
    dc.slab_count = dc.positions.size();
  }
  finish(cover);
  return cover;
}

// Sum over residue types with entropy <= threshold of
// multinomial(t) * prod_r values_per_residue[r]^t_r.
BigInt projected_string_bound(const ProjectedAlphabet& a, int n, double threshold,
                              std::uint64_t type_cap) {
  const auto per_residue = a.values_per_residue();
  std::size_t distinct = 0;
  for (int c : per_residue) distinct += c;
  const bool fits = log2_count(distinct, n) + std::log2(double(n) + 1) < 120;
  u128 small = 0;
  BigInt big = 0;
  for_each_type(
      n, a.base,
      [&](std::span<const std::int64_t> t) {
        if (entropy_N(t, a.base) > threshold) return;
        for (int r = 0; r < a.base; ++r) {
          if (t[r] > 0 && per_residue[r] == 0) return;
        }
        if (fits) {
          u128 term = multinomial_u128(t);
          for (int r = 0; r < a.base; ++r) {
            for (std::int64_t j = 0; j < t[r]; ++j) term *= static_cast<unsigned>(per_residue[r]);
          }
          small += term;
        } else {
          BigInt term = type_class_size(t);
          for (int r = 0; r < a.base; ++r) term *= boost::multiprecision::pow(BigInt(per_residue[r]), static_cast<unsigned>(t[r]));
          big += term;
        }
      },
      type_cap);
  return fits ? to_big(small) : big;
}

// Digits grouped by their residue signature across all directions. Words
// whose class types agree have identical residue types in every direction.
struct SignatureClasses {
  std::vector<std::vector<int>> residues;  // [class][direction]
  std::vector<std::uint64_t> sizes;
};

SignatureClasses signature_classes(std::span<const ProjectedAlphabet> alphabets,
                                   std::size_t digits) {
  SignatureClasses out;
  for (std::size_t i = 0; i < digits; ++i) {
    std::vector<int> sig;
    for (const auto& a : alphabets) sig.push_back(a.residues[i]);
    const auto it = std::find(out.residues.begin(), out.residues.end(), sig);
    if (it == out.residues.end()) {
      out.residues.push_back(std::move(sig));
      out.sizes.push_back(1);
    } else {
      ++out.sizes[it - out.residues.begin()];
    }
  }
  return out;
}

void check_word_range(std::size_t m, int n) {
  if (log2_count(m, n) + std::log2(double(n) + 1) > 120) {
    throw CapExceeded("aggregated word counts exceed 128-bit range");
  }
}

// First direction whose residue entropy is under the threshold, or -1.
template <typename ResidueOf>
int first_deficient(int k, int classes, int N, std::span<const std::int64_t> counts,
                    const CountEntropy& entropy, double threshold,
                    std::vector<int>& residue_counts, ResidueOf&& residue_of) {
  for (int v = 0; v < k; ++v) {
    std::fill(residue_counts.begin(), residue_counts.end(), 0);
    for (int c = 0; c < classes; ++c) {
      residue_counts[residue_of(c, v)] += static_cast<int>(counts[c]);
    }
    if (entropy(residue_counts, N) <= threshold) return v;
  }
  return -1;
}

std::vector<BigInt> finish_counts(const std::vector<u128>& totals, bool failed) {
  if (failed) {
    throw NoDirection("a digit type has no low-entropy direction; the certificate is unsound");
  }
  std::vector<BigInt> out;
  for (auto t : totals) out.push_back(to_big(t));
  return out;
}

std::vector<BigInt> aggregated_word_counts(std::span<const ProjectedAlphabet> alphabets,
                                           std::size_t digits, int n, double threshold,
                                           std::uint64_t type_cap) {
  check_word_range(digits, n);
  const SignatureClasses classes = signature_classes(alphabets, digits);
  const int m = static_cast<int>(classes.sizes.size());
  const int N = alphabets.front().base;
  const int k = static_cast<int>(alphabets.size());
  if (type_count(n, m) > type_cap) {
    throw CapExceeded("aggregated mode needs " + std::to_string(type_count(n, m)) +
                      " class types, above the cap");
  }
  // size_pow[c][j] = sizes[c]^j
  std::vector<std::vector<u128>> size_pow(m, std::vector<u128>(n + 1, 1));
  for (int c = 0; c < m; ++c) {
    for (int j = 1; j <= n; ++j) size_pow[c][j] = size_pow[c][j - 1] * classes.sizes[c];
  }
  const CountEntropy entropy(n, N);
  std::vector<u128> totals(k, 0);
  bool failed = false;

#pragma omp parallel
  {
    std::vector<u128> acc(k, 0);
    std::vector<int> rc(N);
    std::vector<std::int64_t> counts(m, 0);
    bool fail = false;
    auto visit = [&] {
      const int v = first_deficient(k, m, N, counts, entropy, threshold, rc,
                                    [&](int c, int dir) { return classes.residues[c][dir]; });
      if (v < 0) {
        fail = true;
        return;
      }
      u128 term = multinomial_u128(counts);
      for (int c = 0; c < m; ++c) term *= size_pow[c][counts[c]];
      acc[v] += term;
    };
    auto tail = [&](auto&& self, int from, std::int64_t total) -> void {
      if (from == m - 1) {
        counts[from] = total;
        visit();
        return;
      }
      for (std::int64_t c = total; c >= 0; --c) {
        counts[from] = c;
        self(self, from + 1, total - c);
      }
    };
#pragma omp for schedule(dynamic, 1)
    for (int first = 0; first <= n; ++first) {
      if (m == 1 && first != n) continue;
      counts[0] = first;
      if (m == 1) {
        visit();
      } else {
        tail(tail, 1, n - first);
      }
    }
#pragma omp critical
    {
      for (int v = 0; v < k; ++v) totals[v] += acc[v];
      failed = failed || fail;
    }
  }
  return finish_counts(totals, failed);
}

CoverCertificate build_aggregated(const DigitSystem& system,
                                  const DirectionCertificate& cert, int n,
                                  const CoverConfig& config) {
  CoverCertificate cover = make_shell(system, cert, n, CoverMode::kAggregated, config.slack);
  const auto alphabets = project_all(system, cert.V);
  const double threshold = assignment_threshold(cert, config.slack);
  const auto counts =
      aggregated_word_counts(alphabets, system.size(), n, threshold, config.type_cap);
  for (std::size_t v = 0; v < cert.V.size(); ++v) {
    auto& dc = cover.per_direction[v];
    dc.word_count = counts[v];
    dc.projected_bound = projected_string_bound(alphabets[v], n, threshold, config.type_cap);
    dc.slab_count = std::min({dc.word_count, dc.range_size, *dc.projected_bound});
  }
  finish(cover);
  return cover;
}

}  // namespace

CoverCertificate build_cover(const DigitSystem& system,
                             const DirectionCertificate& cert, int n,
                             CoverMode mode, const CoverConfig& config) {
  return mode == CoverMode::kExact ? build_exact(system, cert, n, config)
                                   : build_aggregated(system, cert, n, config);
}

CoverCertificate build_cover_serial(const DigitSystem& system,
                                    const DirectionCertificate& cert, int n,
                                    const CoverConfig& config) {
  CoverCertificate cover = make_shell(system, cert, n, CoverMode::kExact, config.slack);
  if (log2_count(system.size(), n) > std::log2(double(config.word_cap))) {
    throw CapExceeded("exact mode word count above the cap");
  }
  const int k = static_cast<int>(cert.V.size());
  std::vector<std::set<BigInt>> positions(k);
  Word word{std::vector<int>(n, 0)};
  const int m = static_cast<int>(system.size());
  while (true) {
    const Direction v = assign_direction(system, word, cert, config.slack);
    const int index = static_cast<int>(
        std::find(cert.V.begin(), cert.V.end(), v) - cert.V.begin());
    cover.per_direction[index].word_count += 1;
    positions[index].insert(projected_position(system, word, v));
    int j = n - 1;
    while (j >= 0 && word.symbols[j] == m - 1) word.symbols[j--] = 0;
    if (j < 0) break;
    ++word.symbols[j];
  }
  for (int v = 0; v < k; ++v) {
    auto& dc = cover.per_direction[v];
    dc.positions.assign(positions[v].begin(), positions[v].end());
    dc.slab_count = dc.positions.size();
  }
  finish(cover);
  return cover;
}

std::vector<BigInt> aggregated_word_counts(const DigitSystem& system,
                                           const DirectionCertificate& cert, int n,
                                           double slack, std::uint64_t type_cap) {
  const auto alphabets = project_all(system, cert.V);
  return aggregated_word_counts(alphabets, system.size(), n,
                                assignment_threshold(cert, slack), type_cap);
}

std::vector<BigInt> aggregated_word_counts_serial(const DigitSystem& system,
                                                  const DirectionCertificate& cert,
                                                  int n, double slack) {
  const auto alphabets = project_all(system, cert.V);
  const int m = static_cast<int>(system.size());
  const int k = static_cast<int>(cert.V.size());
  check_word_range(m, n);
  const CountEntropy entropy(n, system.base());
  const double threshold = assignment_threshold(cert, slack);
  std::vector<u128> totals(k, 0);
  std::vector<int> rc(system.base());
  bool failed = false;
  for_each_type(
      n, m,
      [&](std::span<const std::int64_t> counts) {
        const int v = first_deficient(k, m, system.base(), counts, entropy, threshold, rc,
                                      [&](int i, int dir) { return alphabets[dir].residues[i]; });
        if (v < 0) {
          failed = true;
        } else {
          totals[v] += multinomial_u128(counts);
        }
      },
      kDefaultTypeCap);
  return finish_counts(totals, failed);
}

double float_total_width(const CoverCertificate& cover) {
  const int d = cover.system.dimension();
  const double scale = std::pow(double(cover.system.base()), cover.level);
  double total = 0;
  for (const auto& dc : cover.per_direction) {
    const double slabs = static_cast<double>(dc.slab_count);
    if (d == 2) {
      total += slabs * double(dc.direction.l1_norm()) / (dc.direction.l2_norm() * scale);
    } else {
      const double width = std::sqrt(static_cast<double>(dc.tubes.width_sq));
      total += slabs * static_cast<double>(dc.tubes.count) * std::pow(width, d - 1);
    }
  }
  return total;
}

LevelChoice required_level(const DigitSystem& system,
                           const DirectionCertificate& cert, double epsilon,
                           int max_level, const CoverConfig& config) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  for (int n = 1; n <= max_level; ++n) {
    const auto cover = build_cover(system, cert, n, CoverMode::kAggregated, config);
    if (cover.total_width_bound < BigRational(epsilon)) {
      return {n, cover.total_width_bound};
    }
  }
  throw std::runtime_error("no level up to " + std::to_string(max_level) +
                           " reaches total width below epsilon");
}

double DecayConstants::bound(int n, int N, double delta_star) const {
  return C * std::pow(double(n + 1), K) * std::pow(double(N), -double(n) * delta_star);
}

DecayConstants decay_constants(const DigitSystem& system,
                               const DirectionCertificate& cert) {
  const int d = system.dimension();
  const int N = system.base();
  DecayConstants c;
  double per_slab = 0;
  for (const auto& v : cert.V) {
    const auto a = project_alphabet(system, v);
    c.K = std::max(c.K, a.residue_alphabet_size());
    c.multiplicity = std::max(c.multiplicity, double(v.l1_norm() * N + 1));
    double factor = double(v.l1_norm());
    if (d >= 3) {
      const double x = static_cast<double>(tube_rule(v).width_factor_sq);
      factor *= std::pow(2.0, d - 2) * std::pow(std::sqrt(x), d - 1);
    }
    per_slab = std::max(per_slab, factor);
  }
  c.C = double(cert.V.size()) * c.multiplicity * per_slab;
  return c;
}

}  // namespace tubenull
