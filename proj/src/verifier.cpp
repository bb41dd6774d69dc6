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

#include "tubenull/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <gmpxx.h>

#include "tubenull/random.hpp"

namespace tubenull {
namespace {

using nlohmann::json;

// Cover fields as read straight from JSON, in GMP types.
struct Parsed {
  int d = 0;
  int N = 0;
  int n = 0;
  bool exact = true;
  double delta_star = 0;
  double slack = 0;
  bool certified = false;
  std::vector<std::vector<int>> digits;
  std::vector<std::vector<long>> V;
  std::vector<std::string> keys;
  std::vector<std::vector<mpz_class>> slabs;  // sorted, exact mode
  std::vector<mpz_class> slab_counts;
  mpz_class tube_count;
  mpq_class total;
};

std::string key_of(const std::vector<long>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s;
}

mpq_class parse_q(const std::string& text) {
  mpq_class q(text, 10);
  q.canonicalize();
  return q;
}

Parsed parse(const json& j) {
  Parsed p;
  const auto& sys = j.at("system");
  p.d = sys.at("d").get<int>();
  p.N = sys.at("N").get<int>();
  for (const auto& dg : sys.at("digits")) p.digits.push_back(dg.get<std::vector<int>>());
  p.n = j.at("n").get<int>();
  p.exact = j.at("mode").get<std::string>() == "exact";
  p.delta_star = j.at("delta_star").get<double>();
  p.slack = j.at("slack").get<double>();
  p.certified = j.at("certified").get<bool>();
  for (const auto& v : j.at("V")) {
    p.V.push_back(v.get<std::vector<long>>());
    p.keys.push_back(key_of(p.V.back()));
  }
  for (const auto& key : p.keys) {
    std::vector<mpz_class> list;
    if (p.exact) {
      for (const auto& q : j.at("slabs").at(key)) list.emplace_back(q.get<std::string>(), 10);
      std::sort(list.begin(), list.end());
    }
    p.slabs.push_back(std::move(list));
    p.slab_counts.emplace_back(j.at("slab_counts").at(key).get<std::string>(), 10);
  }
  p.tube_count = mpz_class(j.at("tube_count").get<std::string>(), 10);
  p.total = parse_q(j.at("total_width_bound").get<std::string>());
  return p;
}

mpz_class power(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

long dot(const std::vector<int>& a, const std::vector<long>& v) {
  long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * v[k];
  return s;
}

long l1(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += std::labs(x);
  return s;
}

long negative_part(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += std::min(x, 0L);
  return s;
}

long positive_part(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += std::max(x, 0L);
  return s;
}

int mod_n(long a, int N) {
  long r = a % N;
  return static_cast<int>(r < 0 ? r + N : r);
}

// Base-N Shannon entropy of a count vector.
double entropy_of(const std::vector<long>& counts, int N) {
  long total = 0;
  for (long c : counts) total += c;
  double h = 0;
  for (long c : counts) {
    if (c == 0) continue;
    const double f = double(c) / double(total);
    h -= f * std::log(f);
  }
  return h / std::log(double(N));
}

// First direction whose residue entropy is within the threshold, or -1.
int assigned(const Parsed& p, const std::vector<int>& symbols) {
  const double threshold = 1.0 - p.delta_star + p.slack;
  for (std::size_t v = 0; v < p.V.size(); ++v) {
    std::vector<long> counts(p.N, 0);
    for (int s : symbols) ++counts[mod_n(dot(p.digits[s], p.V[v]), p.N)];
    if (entropy_of(counts, p.N) <= threshold) return static_cast<int>(v);
  }
  return -1;
}

bool listed(const std::vector<mpz_class>& slabs, const mpz_class& q) {
  return std::binary_search(slabs.begin(), slabs.end(), q);
}

// Tube geometry for direction v: solve axis, line axis, transverse axes, X.
struct Tube {
  int solve = 0;
  int line = 1;
  std::vector<int> transverse;
  mpq_class X;
};

Tube tube_of(const std::vector<long>& v) {
  const int d = static_cast<int>(v.size());
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::labs(v[a]) > std::labs(v[b]); });
  Tube t;
  t.solve = order[0];
  t.line = order[1];
  long rest = 0;
  for (int k = 2; k < d; ++k) {
    t.transverse.push_back(order[k]);
    rest += std::labs(v[order[k]]);
  }
  mpq_class ratio(1 + rest, std::labs(v[t.solve]));
  ratio.canonicalize();
  t.X = mpq_class(d - 2) + ratio * ratio;
  return t;
}

// Smallest multiple of 2^-bits that is at least sqrt(x).
mpq_class sqrt_ceiling(const mpq_class& x, int bits) {
  mpz_class scaled = x.get_num() << (2 * bits);
  mpz_class a;
  mpz_cdiv_q(a.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  if (r * r < a) r += 1;
  mpq_class out(r, mpz_class(1) << bits);
  out.canonicalize();
  return out;
}

mpq_class qpow(const mpq_class& x, int e) {
  mpq_class r = 1;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

struct PerSlab {
  mpz_class tubes;
  mpq_class contribution;
};

PerSlab per_slab(const std::vector<long>& v, int d, int N, int n) {
  const mpz_class scale = power(N, n);
  mpq_class h(mpz_class(l1(v)), scale);
  h.canonicalize();
  if (d == 2) return {1, h};
  const Tube t = tube_of(v);
  mpz_class per_axis;
  mpz_class norm(l1(v));
  mpz_cdiv_q(per_axis.get_mpz_t(), scale.get_mpz_t(), norm.get_mpz_t());
  mpz_class count;
  mpz_pow_ui(count.get_mpz_t(), per_axis.get_mpz_t(), d - 2);
  const mpq_class w2 = t.X * h * h;
  mpq_class power_part;
  if ((d - 1) % 2 == 0) {
    power_part = qpow(w2, (d - 1) / 2);
  } else {
    power_part = qpow(w2, (d - 2) / 2) * sqrt_ceiling(t.X, 24) * h;
  }
  mpq_class c = mpq_class(count) * power_part;
  c.canonicalize();
  return {count, c};
}

std::string word_text(const Parsed& p, const std::vector<int>& symbols) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (k) out << ",";
    out << "(";
    const auto& dg = p.digits[symbols[k]];
    for (std::size_t i = 0; i < dg.size(); ++i) out << (i ? "," : "") << dg[i];
    out << ")";
  }
  out << ")";
  return out.str();
}

// Point a / N^depth inside the tube of slab Q in direction v (d >= 3).
bool in_tube(const Parsed& p, std::size_t vi, const mpz_class& Q,
             const std::vector<mpz_class>& a, int depth) {
  const auto& v = p.V[vi];
  const Tube t = tube_of(v);
  const mpz_class Nn = power(p.N, p.n);
  const mpz_class ND = power(p.N, depth);
  mpq_class h(mpz_class(l1(v)), Nn);
  h.canonicalize();
  mpz_class cells;
  mpz_class norm(l1(v));
  mpz_cdiv_q(cells.get_mpz_t(), Nn.get_mpz_t(), norm.get_mpz_t());
  std::vector<mpq_class> x(p.d), p0(p.d, 0), u(p.d, 0);
  for (int k = 0; k < p.d; ++k) {
    x[k] = mpq_class(a[k], ND);
    x[k].canonicalize();
  }
  mpq_class rest = 0;
  for (int k : t.transverse) {
    // cell index floor(x_k / h), clamped to the last cell
    mpq_class ratio = x[k] / h;
    mpz_class c;
    mpz_fdiv_q(c.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    if (c > cells - 1) c = cells - 1;
    p0[k] = (mpq_class(c) + mpq_class(1, 2)) * h;
    rest += mpq_class(v[k]) * p0[k];
  }
  mpq_class centre(2 * Q + negative_part(v) + positive_part(v), 2 * Nn);
  centre.canonicalize();
  p0[t.solve] = (centre - rest) / mpq_class(v[t.solve]);
  u[t.line] = v[t.solve];
  u[t.solve] = -v[t.line];
  mpq_class diff2 = 0, along = 0, u2 = 0;
  for (int k = 0; k < p.d; ++k) {
    const mpq_class e = x[k] - p0[k];
    diff2 += e * e;
    along += e * u[k];
    u2 += u[k] * u[k];
  }
  const mpq_class dist2 = diff2 - along * along / u2;
  return dist2 <= t.X * h * h / 4;
}

CheckResult failure(const std::string& name, const std::string& details) {
  return {name, false, false, details};
}

}  // namespace

bool VerificationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed || c.skipped; });
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  points_tested += other.points_tested;
  point_failures += other.point_failures;
  words_checked += other.words_checked;
  if (!other.recomputed_width.empty()) recomputed_width = other.recomputed_width;
  if (other.seed) seed = other.seed;
}

nlohmann::json VerificationReport::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name},
                           {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")},
                           {"details", c.details}});
  }
  json j = {{"valid", valid()},
            {"checks", checks_json},
            {"words_checked", words_checked},
            {"samples", {{"tested", points_tested}, {"failures", point_failures}}},
            {"seed", seed}};
  if (!recomputed_width.empty()) j["recomputed_width"] = recomputed_width;
  return j;
}

VerificationReport verify_containment(const json& cover, std::uint64_t word_cap) {
  VerificationReport report;
  Parsed p;
  try {
    p = parse(cover);
  } catch (const std::exception& e) {
    report.checks.push_back(failure("containment", std::string("unreadable cover: ") + e.what()));
    return report;
  }
  if (!p.exact) {
    report.checks.push_back({"containment", true, true, "aggregated mode has no slab lists"});
    return report;
  }
  const std::uint64_t m = p.digits.size();
  double log_words = p.n * std::log2(double(m));
  if (log_words > std::log2(double(word_cap))) {
    report.checks.push_back({"containment", true, true, "word count above the exhaustive cap"});
    return report;
  }
  std::uint64_t words = 1;
  for (int k = 0; k < p.n; ++k) words *= m;

  std::uint64_t failures = 0;
  std::uint64_t first_bad = words;
  std::string first_reason;
#pragma omp parallel
  {
    std::uint64_t local_failures = 0;
    std::uint64_t local_first = words;
    std::string local_reason;
    std::vector<int> symbols(p.n);
    std::vector<mpz_class> corner(p.d);
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(words); ++t) {
      std::uint64_t code = static_cast<std::uint64_t>(t);
      for (int k = p.n - 1; k >= 0; --k) {
        symbols[k] = static_cast<int>(code % m);
        code /= m;
      }
      std::string reason;
      const int vi = assigned(p, symbols);
      if (vi < 0) {
        reason = "no direction under the entropy threshold";
      } else {
        for (int k = 0; k < p.d; ++k) {
          corner[k] = 0;
          for (int s : symbols) corner[k] = corner[k] * p.N + p.digits[s][k];
        }
        const auto& v = p.V[vi];
        mpz_class q = 0;
        for (int k = 0; k < p.d; ++k) q += corner[k] * v[k];
        if (!listed(p.slabs[vi], q)) {
          reason = "no listed slab of direction (" + p.keys[vi] + ") holds the cube";
        } else {
          const mpz_class lo = q + negative_part(v), hi = q + positive_part(v);
          for (int mask = 0; mask < (1 << p.d) && reason.empty(); ++mask) {
            mpz_class s = 0;
            for (int k = 0; k < p.d; ++k) s += (corner[k] + ((mask >> k) & 1)) * v[k];
            if (s < lo || s > hi) reason = "cube corner outside its slab";
          }
        }
      }
      if (!reason.empty()) {
        ++local_failures;
        if (static_cast<std::uint64_t>(t) < local_first) {
          local_first = static_cast<std::uint64_t>(t);
          local_reason = word_text(p, symbols) + ": " + reason;
        }
      }
    }
#pragma omp critical
    {
      failures += local_failures;
      if (local_first < first_bad) {
        first_bad = local_first;
        first_reason = local_reason;
      }
    }
  }
  report.words_checked = words;
  if (failures == 0) {
    report.checks.push_back({"containment", true, false,
                             std::to_string(words) + " words covered"});
  } else {
    report.checks.push_back(failure("containment", std::to_string(failures) +
                                                       " uncovered words; first " + first_reason));
  }
  return report;
}

VerificationReport verify_sampling(const json& cover, std::uint64_t samples, int depth,
                                   std::uint64_t seed, bool full_cube) {
  VerificationReport report;
  report.seed = seed;
  Parsed p;
  try {
    p = parse(cover);
  } catch (const std::exception& e) {
    report.checks.push_back(failure("sampling", std::string("unreadable cover: ") + e.what()));
    return report;
  }
  if (samples == 0) {
    report.checks.push_back({"sampling", true, true, "no samples requested"});
    return report;
  }
  if (!p.exact) {
    report.checks.push_back({"sampling", true, true, "aggregated mode has no slab lists"});
    return report;
  }
  if (depth < p.n + 2) {
    report.checks.push_back(failure("sampling", "depth must be at least n + 2"));
    return report;
  }
  const mpz_class S = power(p.N, depth - p.n);
  std::uint64_t failures = 0;
#pragma omp parallel
  {
    std::uint64_t local = 0;
    std::vector<mpz_class> a(p.d);
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(samples); ++s) {
      CounterRng rng(seed, static_cast<std::uint64_t>(s));
      for (auto& x : a) x = 0;
      for (int k = 0; k < depth; ++k) {
        if (full_cube) {
          for (int i = 0; i < p.d; ++i) a[i] = a[i] * p.N + static_cast<long>(rng.below(p.N));
        } else {
          const auto& dg = p.digits[rng.below(p.digits.size())];
          for (int i = 0; i < p.d; ++i) a[i] = a[i] * p.N + dg[i];
        }
      }
      bool covered = false;
      for (std::size_t vi = 0; vi < p.V.size() && !covered; ++vi) {
        const auto& v = p.V[vi];
        mpz_class t = 0;
        for (int i = 0; i < p.d; ++i) t += a[i] * v[i];
        // Q with Q + m_v <= t / S <= Q + M_v
        mpz_class lo, hi;
        mpz_class upper = t - positive_part(v) * S;
        mpz_class lower = t - negative_part(v) * S;
        mpz_cdiv_q(lo.get_mpz_t(), upper.get_mpz_t(), S.get_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), lower.get_mpz_t(), S.get_mpz_t());
        const auto& list = p.slabs[vi];
        for (auto it = std::lower_bound(list.begin(), list.end(), lo);
             it != list.end() && *it <= hi && !covered; ++it) {
          covered = p.d == 2 || in_tube(p, vi, *it, a, depth);
        }
      }
      if (!covered) ++local;
    }
#pragma omp critical
    failures += local;
  }
  report.points_tested = samples;
  report.point_failures = failures;
  const std::string details = std::to_string(samples) + " points, " + std::to_string(failures) +
                              " outside the cover" + (full_cube ? " (full-cube control)" : "");
  report.checks.push_back({"sampling", failures == 0, false, details});
  return report;
}

VerificationReport verify_width(const json& cover) {
  VerificationReport report;
  Parsed p;
  try {
    p = parse(cover);
  } catch (const std::exception& e) {
    report.checks.push_back(failure("width", std::string("unreadable cover: ") + e.what()));
    return report;
  }
  if (!p.certified || !(p.delta_star > 0)) {
    report.checks.push_back(failure("certificate", "direction certificate is not certified"));
  }
  mpq_class total = 0;
  mpz_class tubes = 0;
  std::vector<std::string> notes;
  for (std::size_t vi = 0; vi < p.V.size(); ++vi) {
    mpz_class count = p.slab_counts[vi];
    if (p.exact) {
      const mpz_class listed_count(static_cast<unsigned long>(p.slabs[vi].size()));
      if (listed_count != count) {
        notes.push_back("direction (" + p.keys[vi] + ") lists " + listed_count.get_str() +
                        " slabs but declares " + count.get_str());
      }
      if (std::adjacent_find(p.slabs[vi].begin(), p.slabs[vi].end()) != p.slabs[vi].end()) {
        notes.push_back("direction (" + p.keys[vi] + ") has duplicate slabs");
      }
      count = listed_count;
    }
    const PerSlab s = per_slab(p.V[vi], p.d, p.N, p.n);
    total += mpq_class(count) * s.contribution;
    tubes += count * s.tubes;
  }
  total.canonicalize();
  report.recomputed_width = total.get_num().get_str() + "/" + total.get_den().get_str();
  if (total != p.total) {
    notes.push_back("total width " + report.recomputed_width + " differs from declared " +
                    p.total.get_num().get_str() + "/" + p.total.get_den().get_str());
  }
  if (tubes != p.tube_count) {
    notes.push_back("tube count " + tubes.get_str() + " differs from declared " +
                    p.tube_count.get_str());
  }
  if (notes.empty()) {
    report.checks.push_back({"width", true, false, "total " + report.recomputed_width});
  } else {
    std::string joined;
    for (const auto& s : notes) joined += (joined.empty() ? "" : "; ") + s;
    report.checks.push_back(failure("width", joined));
  }
  return report;
}

VerificationReport verify_all(const json& cover, std::uint64_t samples, int depth,
                              std::uint64_t seed) {
  VerificationReport report = verify_containment(cover);
  report.merge(verify_width(cover));
  report.merge(verify_sampling(cover, samples, depth, seed));
  report.seed = seed;
  return report;
}

std::vector<DecayRow> decay_report(const DigitSystem& system,
                                   const DirectionCertificate& cert, int n_lo, int n_hi,
                                   const CoverConfig& config) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad level range");
  const DecayConstants constants = decay_constants(system, cert);
  std::vector<DecayRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto cover = build_cover(system, cert, n, CoverMode::kAggregated, config);
    DecayRow row{n, cover.total_width_bound, cover.total_width_float(), 0, 0, false};
    if (!rows.empty()) row.ratio = row.width_float / rows.back().width_float;
    row.bound = constants.bound(n, system.base(), cert.delta_star);
    row.holds = row.width_float <= row.bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tubenull
