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
#include "tubenull/svg.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <stack>

using namespace tubenull;

namespace {

const DirectionCertificate& carpet_cert() {
  static const DirectionCertificate cert = delta_star(fixtures::carpet(), fixtures::v4());
  return cert;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Minimal tag-balance check: every opening tag is closed in order.
bool balanced_tags(const std::string& xml) {
  std::stack<std::string> open;
  const std::regex tag(R"(<(/?)([A-Za-z][A-Za-z0-9]*)[^>]*?(/?)>)");
  for (auto it = std::sregex_iterator(xml.begin(), xml.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[3] == "/") continue;
    if (m[1] == "/") {
      if (open.empty() || open.top() != m[2]) return false;
      open.pop();
    } else {
      open.push(m[2]);
    }
  }
  return open.empty();
}

}  // namespace

TEST_CASE("integers and fractions round-trip as strings") {
  const BigInt big = pow_big(3, 80) * -7;
  CHECK(parse_bigint(to_decimal(big)) == big);
  CHECK(parse_bigint("-0") == 0);
  CHECK(to_fraction(BigRational(6, 4)) == "3/2");
  CHECK(to_fraction(BigRational(5)) == "5/1");
  CHECK(parse_fraction("5") == 5);
  CHECK(parse_fraction("-10/4") == BigRational(-5, 2));
  CHECK_THROWS_AS(parse_bigint("12a"), ParseError);
  CHECK_THROWS_AS(parse_bigint(""), ParseError);
  CHECK_THROWS_AS(parse_fraction("1/0"), ParseError);
  CHECK_THROWS_AS(parse_fraction("1/-2"), ParseError);
}

TEST_CASE("systems and directions round-trip") {
  for (const auto& s : {fixtures::carpet(), fixtures::menger()}) {
    CHECK(system_from_json(to_json(s)) == s);
  }
  CHECK(system_from_json(read_json_file(fixtures::data("carpet.json"))) == fixtures::carpet());
  CHECK(system_from_json(read_json_file(fixtures::data("menger.json"))) == fixtures::menger());
  CHECK(directions_from_json(directions_to_json(fixtures::v4())) == fixtures::v4());
  CHECK(directions_from_json(read_json_file(fixtures::data("v4.json"))) == fixtures::v4());
}

TEST_CASE("invalid inputs raise parse or system errors") {
  CHECK_THROWS_AS(system_from_json(Json::parse(R"({"d":2,"N":3})")), ParseError);
  CHECK_THROWS_AS(system_from_json(Json::parse(R"({"d":2,"N":3,"digits":[[0,0.5]]})")), ParseError);
  CHECK_THROWS_AS(system_from_json(read_json_file(fixtures::data("full_grid.json"))), SystemError);
  CHECK_THROWS_AS(directions_from_json(Json::parse(R"({"directions":[]})")), ParseError);
  CHECK_THROWS_AS(directions_from_json(Json::parse(R"({"directions":[[2,2]]})")), ParseError);
  CHECK_THROWS_AS(read_json_file(fixtures::data("does_not_exist.json")), ParseError);
}

TEST_CASE("direction certificates round-trip") {
  const auto& cert = carpet_cert();
  const auto back = certificate_from_json(to_json(cert));
  CHECK(back.V == cert.V);
  CHECK(back.delta_star == cert.delta_star);
  CHECK(back.gap == cert.gap);
  CHECK(back.witness == cert.witness);
  CHECK(back.oracle == cert.oracle);
  CHECK(back.certified == cert.certified);
}

TEST_CASE("covers round-trip in both modes") {
  for (auto mode : {CoverMode::kExact, CoverMode::kAggregated}) {
    const auto cover = build_cover(fixtures::carpet(), carpet_cert(), 3, mode);
    const Json j = to_json(cover);
    const auto back = cover_from_json(j);
    CHECK(back.level == 3);
    CHECK(back.mode == mode);
    CHECK(back.total_width_bound == cover.total_width_bound);
    CHECK(back.tube_count == cover.tube_count);
    REQUIRE(back.per_direction.size() == cover.per_direction.size());
    for (std::size_t k = 0; k < cover.per_direction.size(); ++k) {
      CHECK(back.per_direction[k].slab_count == cover.per_direction[k].slab_count);
      CHECK(back.per_direction[k].word_count == cover.per_direction[k].word_count);
      CHECK(back.per_direction[k].positions == cover.per_direction[k].positions);
    }
    CHECK(to_json(back) == j);
    CHECK(j.contains("slabs") == (mode == CoverMode::kExact));
    CHECK(j.contains("projected_bounds") == (mode == CoverMode::kAggregated));
  }
}

TEST_CASE("graph-directed systems round-trip") {
  const Json j = read_json_file(fixtures::data("two_vertex_reflection_gds.json"));
  const auto g = gds_from_json(j);
  const auto back = gds_from_json(to_json(g));
  CHECK(back.vertices() == 2);
  CHECK(back.edges().size() == g.edges().size());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    CHECK(back.edges()[k].isometry == g.edges()[k].isometry);
    CHECK(back.edges()[k].digit == g.edges()[k].digit);
  }
  Json as_bool = j;
  for (auto& e : as_bool["edges"]) {
    for (auto& r : e["reflect"]) r = r.get<int>() != 0;
  }
  CHECK(gds_from_json(as_bool).edges()[1].isometry == g.edges()[1].isometry);
}

TEST_CASE("atomic writes replace the file") {
  const auto dir = std::filesystem::temp_directory_path() / "tubenull_serialization_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.json").string();
  write_file_atomic(path, "{\"a\": 1}\n");
  write_file_atomic(path, "{\"a\": 2}\n");
  CHECK(read_json_file(path).at("a") == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("planar SVG has one rectangle per cylinder and slab") {
  const auto cover = build_cover(fixtures::carpet(), carpet_cert(), 3, CoverMode::kExact);
  std::size_t slabs = 0;
  for (const auto& dc : cover.per_direction) slabs += dc.positions.size();
  const std::string svg = render_svg(cover);
  CHECK(count_of(svg, "<rect") == 512 + slabs + kSvgChrome);
  CHECK(count_of(svg, "class=\"cyl\"") == 512);
  CHECK(count_of(svg, "class=\"slab\"") == slabs);
  CHECK(balanced_tags(svg));
  CHECK(svg.rfind("</svg>") != std::string::npos);

  RenderSpec bare;
  bare.show_cylinders = false;
  CHECK(count_of(render_svg(cover, bare), "<rect") == slabs + kSvgChrome);
  bare.canvas = 10;
  CHECK_THROWS_AS(render_svg(cover, bare), std::invalid_argument);

  const auto agg = build_cover(fixtures::carpet(), carpet_cert(), 3, CoverMode::kAggregated);
  CHECK_THROWS_AS(render_svg(agg), std::invalid_argument);
}
