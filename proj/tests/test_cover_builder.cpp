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

#include "doctest.h"
#include "fixtures.hpp"
#include "tubenull/cover_builder.hpp"
#include "tubenull/random.hpp"

#include <cmath>
#include <map>
#include <set>

using namespace tubenull;

namespace {

const DirectionCertificate& carpet_cert() {
  static const DirectionCertificate cert = delta_star(fixtures::carpet(), fixtures::v4());
  return cert;
}

const DirectionCertificate& menger_cert() {
  static const DirectionCertificate cert = direction_search(fixtures::menger(), 1);
  return cert;
}

long dot(const Digit& i, const Direction& v) {
  long s = 0;
  for (std::size_t k = 0; k < i.size(); ++k) s += static_cast<long>(i[k]) * v[k];
  return s;
}

// Word-by-word cover written from scratch: first direction whose residue
// entropy is at most 1 - delta* + slack, Q accumulated in 64-bit.
struct BruteCover {
  std::vector<long> words;
  std::vector<std::set<long>> positions;
};

BruteCover brute_cover(const DigitSystem& s, const DirectionCertificate& cert, int n) {
  const int N = s.base();
  const double threshold = 1 - cert.delta_star + kDefaultSlack;
  BruteCover out{std::vector<long>(cert.V.size(), 0), std::vector<std::set<long>>(cert.V.size())};
  fixtures::for_each_word(s.size(), n, [&](const Word& w) {
    for (std::size_t j = 0; j < cert.V.size(); ++j) {
      std::vector<int> counts(N, 0);
      long q = 0;
      for (int sym : w.symbols) {
        const long x = dot(s.digit(sym), cert.V[j]);
        ++counts[((x % N) + N) % N];
        q = q * N + x;
      }
      double h = 0;
      for (int c : counts) {
        if (c > 0) h -= (double(c) / n) * std::log(double(c) / n);
      }
      if (h / std::log(double(N)) <= threshold) {
        ++out.words[j];
        out.positions[j].insert(q);
        return;
      }
    }
    FAIL("word without a direction");
  });
  return out;
}

}  // namespace

TEST_CASE("slab of a word contains its cylinder") {
  const auto s = fixtures::carpet();
  for (const auto& v : fixtures::v4()) {
    fixtures::for_each_word(s.size(), 3, [&](const Word& w) {
      const Slab slab = slab_for(s, w, v);
      CHECK(slab.upper - slab.lower == v.l1_norm());
      CHECK(slab.width_bound == BigRational(v.l1_norm(), 27));
      // every corner of the cylinder projects into [lower, upper] / 27
      const Cube c = cylinder_cube(s, w);
      for (int mask = 0; mask < 4; ++mask) {
        BigRational proj = 0;
        for (int k = 0; k < 2; ++k) {
          BigRational x = c.corner.coordinate(s, k);
          if ((mask >> k) & 1) x += c.side(s);
          proj += x * v[k];
        }
        CHECK(proj * 27 >= BigRational(slab.lower));
        CHECK(proj * 27 <= BigRational(slab.upper));
      }
    });
  }
}

TEST_CASE("slab_for on a fixed word") {
  const auto s = fixtures::carpet();
  const Slab slab = slab_for(s, make_word(s, {{2, 2}, {0, 1}}), Direction::create({1, -1}));
  CHECK(slab.position == -1);  // 0 * 3 + (-1)
  CHECK(slab.position == projected_position(s, make_word(s, {{2, 2}, {0, 1}}),
                                            Direction::create({1, -1})));
  CHECK(slab.lower == slab.position - 1);
  CHECK(slab.upper == slab.position + 1);
  CHECK(slab.euclidean_width == doctest::Approx(2 / (std::sqrt(2.0) * 9)));
}

TEST_CASE("every word is assigned a direction with low residue entropy") {
  const auto s = fixtures::carpet();
  const auto& cert = carpet_cert();
  const auto alphabets = project_all(s, cert.V);
  const double threshold = assignment_threshold(cert, kDefaultSlack);
  for (int n = 1; n <= 5; ++n) {
    fixtures::for_each_word(s.size(), n, [&](const Word& w) {
      const Direction v = assign_direction(s, w, cert);
      const auto a = project_alphabet(s, v);
      CHECK(entropy_N(std::span<const std::int64_t>(residue_type(a, w).counts), 3) <= threshold);
    });
  }
  // a threshold of -1 leaves nothing assignable
  CHECK_THROWS_AS(assign_direction(alphabets, empirical_type(s, Word{{0, 1, 2}}), -1.0),
                  NoDirection);
}

TEST_CASE("exact cover matches the brute-force cover") {
  const auto s = fixtures::carpet();
  const auto& cert = carpet_cert();
  for (int n = 1; n <= 6; ++n) {
    const auto cover = build_cover(s, cert, n, CoverMode::kExact);
    const auto brute = brute_cover(s, cert, n);
    BigInt words = 0;
    for (std::size_t j = 0; j < cert.V.size(); ++j) {
      const auto& dc = cover.per_direction[j];
      CHECK(dc.word_count == brute.words[j]);
      CHECK(dc.slab_count == brute.positions[j].size());
      std::vector<BigInt> expect(brute.positions[j].begin(), brute.positions[j].end());
      CHECK(dc.positions == expect);
      words += dc.word_count;
    }
    CHECK(words == pow_big(8, n));
  }
}

TEST_CASE("parallel exact cover equals the serial reference") {
  for (int n : {3, 5}) {
    const auto a = build_cover(fixtures::carpet(), carpet_cert(), n, CoverMode::kExact);
    const auto b = build_cover_serial(fixtures::carpet(), carpet_cert(), n);
    CHECK(a.total_width_bound == b.total_width_bound);
    CHECK(a.tube_count == b.tube_count);
    for (std::size_t j = 0; j < a.per_direction.size(); ++j) {
      CHECK(a.per_direction[j].positions == b.per_direction[j].positions);
      CHECK(a.per_direction[j].word_count == b.per_direction[j].word_count);
    }
  }
  const auto a = build_cover(fixtures::menger(), menger_cert(), 2, CoverMode::kExact);
  const auto b = build_cover_serial(fixtures::menger(), menger_cert(), 2);
  CHECK(a.total_width_bound == b.total_width_bound);
}

TEST_CASE("aggregated counts agree with exact counts and bound the slabs") {
  const auto s = fixtures::carpet();
  const auto& cert = carpet_cert();
  for (int n = 1; n <= 6; ++n) {
    const auto exact = build_cover(s, cert, n, CoverMode::kExact);
    const auto agg = build_cover(s, cert, n, CoverMode::kAggregated);
    const auto serial = aggregated_word_counts_serial(s, cert, n);
    CHECK(agg.total_width_bound >= exact.total_width_bound);
    for (std::size_t j = 0; j < cert.V.size(); ++j) {
      const auto& e = exact.per_direction[j];
      const auto& g = agg.per_direction[j];
      CHECK(g.word_count == e.word_count);
      CHECK(serial[j] == e.word_count);
      CHECK(g.slab_count >= e.slab_count);
      CHECK(g.range_size >= e.slab_count);
      REQUIRE(g.projected_bound.has_value());
      CHECK(*g.projected_bound >= e.slab_count);
      CHECK(g.slab_count == std::min({g.word_count, g.range_size, *g.projected_bound}));
    }
  }
}

TEST_CASE("aggregated counts for the sponge match the serial reference") {
  const auto s = fixtures::menger();
  for (int n = 1; n <= 4; ++n) {
    const auto agg = build_cover(s, menger_cert(), n, CoverMode::kAggregated);
    const auto serial = aggregated_word_counts_serial(s, menger_cert(), n);
    BigInt total = 0;
    for (std::size_t j = 0; j < serial.size(); ++j) {
      CHECK(agg.per_direction[j].word_count == serial[j]);
      total += serial[j];
    }
    CHECK(total == pow_big(20, n));
  }
}

TEST_CASE("range size counts the attainable positions") {
  const auto cover = build_cover(fixtures::carpet(), carpet_cert(), 3, CoverMode::kAggregated);
  // (1,0): Q in [0, 2 * 13]; (1,-1): Q in [-2 * 13, 2 * 13]
  CHECK(cover.per_direction[0].range_size == 27);
  CHECK(cover.per_direction[3].range_size == 53);
}

TEST_CASE("planar total width dominates the euclidean widths") {
  for (int n = 1; n <= 6; ++n) {
    const auto cover = build_cover(fixtures::carpet(), carpet_cert(), n, CoverMode::kExact);
    CHECK(float_total_width(cover) <= cover.total_width_float() + 1e-12);
    BigRational expect = 0;
    for (const auto& dc : cover.per_direction) {
      expect += BigRational(dc.slab_count) * BigRational(dc.direction.l1_norm(), pow_big(3, n));
    }
    CHECK(cover.total_width_bound == expect);
  }
}

TEST_CASE("tubes of a slab in three dimensions") {
  // axis direction, h = 1/9: nine transverse cells, X = 1 + 1 = 2
  const auto t = tubes_per_slab(Direction::create({1, 0, 0}), 3, 3, 2);
  CHECK(t.count == 9);
  CHECK(t.cell_side == BigRational(1, 9));
  CHECK(t.width_sq == BigRational(2, 81));
  CHECK(t.contribution == BigRational(2, 9));
  const auto rule = tube_rule(Direction::create({1, 0, -1}));
  CHECK(rule.solve_axis == 0);
  CHECK(rule.line_axis == 2);
  CHECK(rule.transverse == std::vector<int>{1});
  CHECK(rule.width_factor_sq == 2);
  // a planar slab is a single tube
  const auto p = tubes_per_slab(Direction::create({1, 1}), 2, 3, 2);
  CHECK(p.count == 1);
  CHECK(p.contribution == BigRational(2, 9));
}

TEST_CASE("tubes cover the slab: sampled points lie within half a width of an axis") {
  CounterRng rng(41, 0);
  auto uniform = [&] { return (static_cast<double>(rng() >> 11) + 0.5) / 9007199254740992.0; };
  for (const auto& comps : std::vector<std::vector<int>>{{1, 0, 0}, {1, 0, -1}, {1, 1, 1}, {2, 1, -1}}) {
    const auto v = Direction::create(comps);
    const auto rule = tube_rule(v);
    const int n = 2;
    const double h = static_cast<double>(v.l1_norm()) / 9.0;
    const double half = std::sqrt(static_cast<double>(rule.width_factor_sq)) * h / 2;
    for (int trial = 0; trial < 4000; ++trial) {
      double x[3] = {uniform(), uniform(), uniform()};
      const double proj = x[0] * v[0] + x[1] * v[1] + x[2] * v[2];
      // slab of width h containing the point, aligned to the level grid
      const double lower = std::floor(proj / h) * h;
      const double center = lower + h / 2;
      const int s = rule.solve_axis, l = rule.line_axis, t = rule.transverse[0];
      const double ct = (std::floor(x[t] / h) + 0.5) * h;
      // axis line: x_t = ct, x . v = center, parametrized by x_l
      double p0[3], u[3] = {0, 0, 0};
      p0[l] = 0;
      p0[t] = ct;
      p0[s] = (center - v[t] * ct) / v[s];
      u[l] = 1;
      u[s] = -static_cast<double>(v[l]) / v[s];
      double diff[3], du = 0, uu = 0;
      for (int k = 0; k < 3; ++k) {
        diff[k] = x[k] - p0[k];
        du += diff[k] * u[k];
        uu += u[k] * u[k];
      }
      double dist2 = 0;
      for (int k = 0; k < 3; ++k) {
        const double r = diff[k] - du / uu * u[k];
        dist2 += r * r;
      }
      CHECK(std::sqrt(dist2) <= half + 1e-12);
    }
  }
}

TEST_CASE("rational square root upper bound") {
  for (const auto& x : {BigRational(2), BigRational(5, 9), BigRational(1, 3), BigRational(16)}) {
    const BigRational r = sqrt_upper(x, 24);
    CHECK(r * r >= x);
    CHECK(static_cast<double>(r) - std::sqrt(static_cast<double>(x)) <= std::ldexp(1.0, -23));
  }
  CHECK(sqrt_upper(BigRational(4)) == 2);
  CHECK(sqrt_upper(BigRational(0)) == 0);
}

TEST_CASE("sponge tube contribution rounds the square root up") {
  const auto s = fixtures::menger();
  const auto cover = build_cover(s, menger_cert(), 2, CoverMode::kExact);
  for (const auto& dc : cover.per_direction) {
    const double width = std::sqrt(static_cast<double>(dc.tubes.width_sq));
    CHECK(static_cast<double>(dc.tubes.contribution) >=
          static_cast<double>(dc.tubes.count) * width * width * (1 - 1e-15));
  }
  CHECK(float_total_width(cover) <= cover.total_width_float() * (1 + 1e-12));
}

TEST_CASE("decay inequality holds along the carpet levels") {
  const auto s = fixtures::carpet();
  const auto& cert = carpet_cert();
  const auto c = decay_constants(s, cert);
  CHECK(c.K == 3);
  CHECK(c.multiplicity == 7);
  CHECK(c.C == doctest::Approx(4 * 7 * 2));
  for (int n = 1; n <= 12; ++n) {
    const auto cover = build_cover(s, cert, n, CoverMode::kAggregated);
    CHECK(cover.total_width_float() <= c.bound(n, 3, cert.delta_star));
  }
}

TEST_CASE("cover inputs are validated") {
  const auto s = fixtures::carpet();
  auto bad = carpet_cert();
  bad.certified = false;
  CHECK_THROWS_AS(build_cover(s, bad, 2, CoverMode::kExact), std::invalid_argument);
  CHECK_THROWS_AS(build_cover(s, carpet_cert(), 0, CoverMode::kExact), std::invalid_argument);
  CoverConfig tight;
  tight.word_cap = 1000;
  CHECK_THROWS_AS(build_cover(s, carpet_cert(), 4, CoverMode::kExact, tight), CapExceeded);
  CHECK_THROWS_AS(build_cover_serial(s, carpet_cert(), 4, tight), CapExceeded);
  tight = {};
  tight.type_cap = 10;
  CHECK_THROWS_AS(build_cover(s, carpet_cert(), 4, CoverMode::kAggregated, tight), CapExceeded);
  CHECK(cover_mode_from_string("exact") == CoverMode::kExact);
  CHECK(std::string(to_string(CoverMode::kAggregated)) == "aggregated");
  CHECK_THROWS_AS(cover_mode_from_string("fast"), std::invalid_argument);
  CHECK_THROWS_AS(required_level(s, carpet_cert(), 0.0), std::invalid_argument);
}

TEST_CASE("parallel aggregated counts equal the serial reference") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(aggregated_word_counts(fixtures::carpet(), carpet_cert(), n) ==
          aggregated_word_counts_serial(fixtures::carpet(), carpet_cert(), n));
  }
}

TEST_CASE("slab of a fixed word along (1,1) and (1,-1)") {
  const auto s = fixtures::carpet();
  const Slab a = slab_for(s, make_word(s, {{2, 2}, {0, 1}}), Direction::create({1, 1}));
  CHECK(a.position == 13);
  CHECK(a.lower == 13);
  CHECK(a.upper == 15);
  CHECK(a.euclidean_width == doctest::Approx(std::sqrt(2.0) / 9));
  const Slab b = slab_for(s, make_word(s, {{0, 2}}), Direction::create({1, -1}));
  CHECK(b.position == -2);
  CHECK(b.lower == -3);
  CHECK(b.upper == -1);
  CHECK(b.width_bound == BigRational(2, 3));
}

TEST_CASE("level one carpet cover assigns all eight words") {
  const auto exact = build_cover(fixtures::carpet(), carpet_cert(), 1, CoverMode::kExact);
  const auto agg = build_cover(fixtures::carpet(), carpet_cert(), 1, CoverMode::kAggregated);
  BigInt words = 0;
  for (std::size_t j = 0; j < exact.per_direction.size(); ++j) {
    words += exact.per_direction[j].word_count;
    CHECK(exact.per_direction[j].word_count == agg.per_direction[j].word_count);
  }
  CHECK(words == 8);
}
