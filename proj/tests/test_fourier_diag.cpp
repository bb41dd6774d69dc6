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
#include "tubenull/fourier_diag.hpp"
#include "tubenull/random.hpp"

#include <cmath>
#include <numbers>

using namespace tubenull;

namespace {

// Transform of the level-n discrete measure: average of exp(-2 pi i x.xi)
// over the corners x of all level-n cylinders, summed directly.
Complex discrete_transform(const DigitSystem& s, const std::vector<double>& xi, int n) {
  Complex sum = 0;
  long count = 0;
  fixtures::for_each_word(s.size(), n, [&](const Word& w) {
    double phase = 0;
    double scale = 1;
    for (int sym : w.symbols) {
      scale /= s.base();
      for (int k = 0; k < s.dimension(); ++k) phase += s.digit(sym)[k] * scale * xi[k];
    }
    sum += std::polar(1.0, -2 * std::numbers::pi * phase);
    ++count;
  });
  return sum / double(count);
}

}  // namespace

TEST_CASE("transfer factor basics") {
  const auto s = fixtures::carpet();
  const TransferFactor phi(s, uniform_prob(8));
  CHECK(std::abs(phi(std::vector<double>{0, 0}) - Complex(1)) < 1e-15);
  CHECK(std::abs(phi(std::vector<double>{3, -5}) - Complex(1)) < 1e-12);
  CHECK_THROWS_AS(TransferFactor(s, uniform_prob(7)), std::invalid_argument);
  CHECK_THROWS_AS(TransferFactor(s, std::vector<double>(8, 0.2)), std::invalid_argument);
  double e = 0;
  for (const auto& d : s.digits()) e += std::sqrt(double(d[0] * d[0] + d[1] * d[1])) / 8;
  CHECK(phi.mean_digit_norm() == doctest::Approx(e));
}

TEST_CASE("truncated product equals the discrete measure transform") {
  const auto s = fixtures::carpet();
  const TransferFactor phi(s, uniform_prob(8));
  for (const auto& xi : std::vector<std::vector<double>>{{1, 0}, {2, -1}, {0.7, 3.2}, {5, 5}}) {
    const Complex brute = discrete_transform(s, xi, 4);
    const Complex prod = mu_hat(phi, xi, 4).value;
    CHECK(std::abs(brute - prod) < 1e-12);
  }
}

TEST_CASE("transform is bounded and conjugate-symmetric") {
  const TransferFactor phi(fixtures::menger(), uniform_prob(20));
  CounterRng rng(8, 0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> xi(3), neg(3);
    for (int k = 0; k < 3; ++k) {
      xi[k] = static_cast<double>(rng.below(2001)) / 10.0 - 100.0;
      neg[k] = -xi[k];
    }
    const Complex a = mu_hat(phi, xi, 40).value;
    CHECK(std::abs(a) <= 1 + 1e-12);
    CHECK(std::abs(mu_hat(phi, neg, 40).value - std::conj(a)) < 1e-12);
  }
  CHECK(std::abs(mu_hat(phi, std::vector<double>{0, 0, 0}, 40).value - Complex(1)) < 1e-13);
}

TEST_CASE("self-similarity recursion mu(N xi) = Phi(xi) mu(xi)") {
  const auto s = fixtures::carpet();
  ProbVector p{0.05, 0.1, 0.15, 0.2, 0.1, 0.1, 0.2, 0.1};
  const TransferFactor phi(s, p);
  for (const auto& xi : std::vector<std::vector<double>>{{0.3, 0.9}, {1.5, -2.25}, {4, 1}}) {
    const std::vector<double> nxi{3 * xi[0], 3 * xi[1]};
    const auto big = mu_hat(phi, nxi, 40);
    const auto small = mu_hat(phi, xi, 40);
    const Complex rhs = phi(xi) * small.value;
    CHECK(std::abs(big.value - rhs) <= big.truncation_bound + small.truncation_bound + 1e-12);
  }
}

TEST_CASE("depth stability within the truncation bound") {
  const TransferFactor phi(fixtures::carpet(), uniform_prob(8));
  for (const auto& xi : std::vector<std::vector<double>>{{1, 1}, {7, -3}, {40, 2}}) {
    const auto a = mu_hat(phi, xi, 20);
    const auto b = mu_hat(phi, xi, 40);
    CHECK(std::abs(a.value - b.value) <= a.truncation_bound + 1e-12);
    CHECK(b.truncation_bound < a.truncation_bound);
  }
  CHECK_THROWS_AS(mu_hat(phi, std::vector<double>{1, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(mu_hat(phi, std::vector<double>{1, 1, 1}, 5), std::invalid_argument);
}

TEST_CASE("point mass has a pure phase transform") {
  // one digit i: the attractor is the fixed point i / (N - 1)
  const auto s = DigitSystem::create(2, 3, {{1, 2}});
  const TransferFactor phi(s, {1.0});
  const std::vector<double> xi{0.4, 1.3};
  const double x0 = 0.5, x1 = 1.0;
  const Complex expect = std::polar(1.0, -2 * std::numbers::pi * (x0 * xi[0] + x1 * xi[1]));
  const auto got = mu_hat(phi, xi, 40);
  CHECK(std::abs(got.value - expect) <= got.truncation_bound + 1e-12);
  CHECK(std::abs(got.value) == doctest::Approx(1.0));
}

TEST_CASE("integer frequencies are invariant under scaling by N") {
  const auto s = fixtures::carpet();
  const TransferFactor phi(s, uniform_prob(8));
  for (const auto& v : fixtures::v4()) {
    for (int z = 1; z <= 5; ++z) {
      const auto c = check_scaling_invariance(phi, v, z, 40);
      CHECK(c.difference <= c.truncation_bound + 1e-12);
    }
  }
  CHECK_THROWS_AS(check_scaling_invariance(phi, fixtures::v4()[0], 0), std::invalid_argument);
}

TEST_CASE("scan keeps exactly the entries above the threshold") {
  const TransferFactor phi(fixtures::carpet(), uniform_prob(8));
  const auto V = fixtures::v4();
  const auto table = modulus_table(phi, V, 6, 40);
  REQUIRE(table.size() == 24);
  CHECK(table[7].v == V[1]);
  CHECK(table[7].z == 2);
  const auto scan = nonvanishing_scan(phi, V, 6, 40, 1e-6);
  std::size_t above = 0;
  for (const auto& e : table) {
    const Complex direct = mu_hat(phi, std::vector<double>{double(e.z) * e.v[0], double(e.z) * e.v[1]}, 40).value;
    CHECK(e.modulus == doctest::Approx(std::abs(direct)).epsilon(1e-14));
    if (e.modulus > 1e-6) ++above;
  }
  CHECK(scan.size() == above);
  for (const auto& e : scan) CHECK(e.modulus > 1e-6);
}
