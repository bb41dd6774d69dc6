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
#include "tubenull/serialization.hpp"
#include "tubenull/verifier.hpp"

using namespace tubenull;

namespace {

const DirectionCertificate& carpet_cert() {
  static const DirectionCertificate cert = delta_star(fixtures::carpet(), fixtures::v4());
  return cert;
}

Json carpet_cover(int n) {
  return to_json(build_cover(fixtures::carpet(), carpet_cert(), n, CoverMode::kExact));
}

const CheckResult& check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check " << name);
  throw std::logic_error("unreachable");
}

// A direction key whose slab list is non-empty.
std::string populated_key(const Json& cover) {
  for (const auto& [key, list] : cover.at("slabs").items()) {
    if (!list.empty()) return key;
  }
  FAIL("no slabs");
  return {};
}

}  // namespace

TEST_CASE("an honest cover passes every check") {
  const Json cover = carpet_cover(3);
  const auto report = verify_all(cover, 2000, 11, 7);
  CHECK(report.valid());
  CHECK(report.words_checked == 512);
  CHECK(report.points_tested == 2000);
  CHECK(report.point_failures == 0);
  CHECK(check(report, "containment").passed);
  CHECK(check(report, "sampling").passed);
  CHECK(check(report, "width").passed);
  CHECK(parse_fraction(report.recomputed_width) ==
        parse_fraction(cover.at("total_width_bound").get<std::string>()));
}

TEST_CASE("removing a slab is detected") {
  Json cover = carpet_cover(3);
  const std::string key = populated_key(cover);
  cover["slabs"][key].erase(cover["slabs"][key].size() / 2);
  const auto report = verify_all(cover, 5000, 11, 1);
  CHECK_FALSE(report.valid());
  CHECK_FALSE(check(report, "containment").passed);
  CHECK_FALSE(check(report, "width").passed);
}

TEST_CASE("an understated width is detected") {
  Json cover = carpet_cover(3);
  const BigRational w = parse_fraction(cover.at("total_width_bound").get<std::string>());
  cover["total_width_bound"] = to_fraction(w - BigRational(1, 1000));
  const auto report = verify_all(cover, 0, 11, 1);
  CHECK_FALSE(report.valid());
  CHECK(check(report, "containment").passed);
  CHECK_FALSE(check(report, "width").passed);
}

TEST_CASE("slabs filed under the wrong direction are detected") {
  Json cover = carpet_cover(3);
  const std::string key = populated_key(cover);
  std::string other;
  for (const auto& [k, list] : cover.at("slabs").items()) {
    if (k != key) {
      other = k;
      break;
    }
  }
  std::swap(cover["slabs"][key], cover["slabs"][other]);
  std::swap(cover["slab_counts"][key], cover["slab_counts"][other]);
  CHECK_FALSE(check(verify_containment(cover), "containment").passed);
}

TEST_CASE("a one-digit system has a one-word cover") {
  const auto s = DigitSystem::create(2, 2, {{1, 0}});
  const auto cert = delta_star(s, fixtures::directions({{1, 0}}));
  REQUIRE(cert.certified);
  CHECK(cert.delta_star == doctest::Approx(1.0));
  const Json cover = to_json(build_cover(s, cert, 1, CoverMode::kExact));
  const auto report = verify_all(cover, 100, 6, 3);
  CHECK(report.valid());
  CHECK(report.words_checked == 1);
}

TEST_CASE("zero samples skips the sampling check") {
  const auto report = verify_all(carpet_cover(2), 0, 10, 1);
  CHECK(report.valid());
  CHECK(check(report, "sampling").skipped);
  CHECK(report.points_tested == 0);
  CHECK(report.to_json().dump().find("\"skipped\"") != std::string::npos);
}

TEST_CASE("sampling is deterministic in the seed") {
  const Json cover = carpet_cover(3);
  CHECK(verify_sampling(cover, 500, 12, 42).to_json() == verify_sampling(cover, 500, 12, 42).to_json());
  CHECK(verify_sampling(cover, 10, 4, 1).checks.front().passed == false);  // depth below n + 2
}

TEST_CASE("points of the full cube escape the carpet cover") {
  const Json cover = carpet_cover(3);
  const auto control = verify_sampling(cover, 4000, 11, 5, true);
  CHECK(control.point_failures > 0);
  CHECK_FALSE(control.valid());
}

TEST_CASE("sponge cover checks tubes in three dimensions") {
  const auto s = fixtures::menger();
  static const auto cert = direction_search(s, 1);
  const Json cover = to_json(build_cover(s, cert, 2, CoverMode::kExact));
  const auto report = verify_all(cover, 3000, 10, 9);
  CHECK(report.valid());
  CHECK(report.words_checked == 400);
}

TEST_CASE("aggregated covers are width-checked only") {
  const Json cover = to_json(build_cover(fixtures::carpet(), carpet_cert(), 8, CoverMode::kAggregated));
  const auto report = verify_all(cover, 100, 16, 1);
  CHECK(report.valid());
  CHECK(check(report, "containment").skipped);
  CHECK(check(report, "width").passed);
}

TEST_CASE("an uncertified certificate fails verification") {
  Json cover = carpet_cover(2);
  cover["certified"] = false;
  CHECK_FALSE(verify_width(cover).valid());
}

TEST_CASE("malformed covers fail rather than throw") {
  Json cover = carpet_cover(2);
  cover.erase("slabs");
  CHECK_FALSE(verify_all(cover, 10, 10, 1).valid());
}

TEST_CASE("decay report rows satisfy the bound") {
  const auto rows = decay_report(fixtures::carpet(), carpet_cert(), 1, 10);
  REQUIRE(rows.size() == 10);
  for (const auto& r : rows) {
    CHECK(r.holds);
    CHECK(r.width_float <= r.bound);
    CHECK(r.width_float == doctest::Approx(static_cast<double>(r.width)));
  }
  CHECK(rows.front().ratio == 0);
}
