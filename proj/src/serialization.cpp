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

#include "tubenull/serialization.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tubenull {
namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::vector<int> int_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("expected an integer array");
    out.push_back(x.get<int>());
  }
  return out;
}

Json direction_list(const std::vector<Direction>& V) {
  Json a = Json::array();
  for (const auto& v : V) a.push_back(v.components());
  return a;
}

std::vector<Direction> parse_direction_list(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("direction list must be a non-empty array");
  std::vector<Direction> V;
  for (const auto& v : j) {
    try {
      V.push_back(Direction::create(int_vector(v)));
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return V;
}

void put_certificate_fields(Json& j, const DirectionCertificate& cert) {
  j["V"] = direction_list(cert.V);
  j["delta_star"] = cert.delta_star;
  j["witness"] = cert.witness;
  j["gap"] = cert.gap;
  j["oracle"] = cert.oracle;
  j["oracle_resolution"] = cert.oracle_resolution;
  j["certified"] = cert.certified;
}

}  // namespace

std::string to_decimal(const BigInt& x) { return x.str(); }

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer string");
  std::size_t start = (text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw ParseError("bad integer '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("bad integer '" + text + "'");
  }
  return BigInt(text);
}

std::string to_fraction(const BigRational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

BigRational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den <= 0) throw ParseError("fraction denominator must be positive");
  return BigRational(num, den);
}

Json to_json(const DigitSystem& system) {
  Json digits = Json::array();
  for (const auto& d : system.digits()) digits.push_back(d);
  return {{"d", system.dimension()}, {"N", system.base()}, {"digits", digits}};
}

DigitSystem system_from_json(const Json& j) {
  return guarded("system", [&] {
    if (!j.is_object()) throw ParseError("system must be an object");
    std::vector<Digit> digits;
    if (!j.at("digits").is_array()) throw ParseError("digits must be an array");
    for (const auto& d : j.at("digits")) digits.push_back(int_vector(d));
    return DigitSystem::create(j.at("d").get<int>(), j.at("N").get<int>(), std::move(digits));
  });
}

Json directions_to_json(const std::vector<Direction>& V) {
  return {{"directions", direction_list(V)}};
}

std::vector<Direction> directions_from_json(const Json& j) {
  return guarded("directions", [&] { return parse_direction_list(j.at("directions")); });
}

Json to_json(const DirectionCertificate& cert) {
  Json j = Json::object();
  put_certificate_fields(j, cert);
  return j;
}

DirectionCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    DirectionCertificate c;
    c.V = parse_direction_list(j.at("V"));
    c.delta_star = j.at("delta_star").get<double>();
    c.witness = j.at("witness").get<std::vector<double>>();
    c.gap = j.at("gap").get<double>();
    c.oracle = j.value("oracle", 0.0);
    c.oracle_resolution = j.value("oracle_resolution", 0);
    c.certified = j.at("certified").get<bool>();
    return c;
  });
}

Json to_json(const CoverCertificate& cover) {
  Json j = Json::object();
  j["system"] = to_json(cover.system);
  put_certificate_fields(j, cover.directions);
  j["n"] = cover.level;
  j["mode"] = to_string(cover.mode);
  j["slack"] = cover.slack;
  Json slabs = Json::object(), slab_counts = Json::object(), word_counts = Json::object();
  Json tubes = Json::object(), ranges = Json::object(), projected = Json::object();
  for (const auto& dc : cover.per_direction) {
    const auto key = dc.direction.key();
    if (cover.mode == CoverMode::kExact) {
      Json list = Json::array();
      for (const auto& q : dc.positions) list.push_back(to_decimal(q));
      slabs[key] = list;
    }
    slab_counts[key] = to_decimal(dc.slab_count);
    word_counts[key] = to_decimal(dc.word_count);
    ranges[key] = to_decimal(dc.range_size);
    if (dc.projected_bound) projected[key] = to_decimal(*dc.projected_bound);
    tubes[key] = {{"count", to_decimal(dc.tubes.count)},
                  {"contribution", to_fraction(dc.tubes.contribution)}};
  }
  if (cover.mode == CoverMode::kExact) j["slabs"] = slabs;
  j["slab_counts"] = slab_counts;
  j["word_counts"] = word_counts;
  j["range_sizes"] = ranges;
  if (cover.mode == CoverMode::kAggregated) j["projected_bounds"] = projected;
  j["tubes"] = tubes;
  j["tube_count"] = to_decimal(cover.tube_count);
  j["total_width_bound"] = to_fraction(cover.total_width_bound);
  return j;
}

CoverCertificate cover_from_json(const Json& j) {
  return guarded("cover", [&] {
    CoverCertificate c{system_from_json(j.at("system")), certificate_from_json(j),
                       j.at("n").get<int>(), CoverMode::kExact, kDefaultSlack, {}, 0, 0};
    if (c.level < 1) throw ParseError("level must be at least 1");
    try {
      c.mode = cover_mode_from_string(j.at("mode").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    c.slack = j.at("slack").get<double>();
    for (const auto& v : c.directions.V) {
      if (v.dimension() != c.system.dimension()) throw ParseError("direction has the wrong dimension");
      const auto key = v.key();
      DirectionCover dc{.direction = v};
      if (c.mode == CoverMode::kExact) {
        for (const auto& q : j.at("slabs").at(key)) dc.positions.push_back(parse_bigint(q.get<std::string>()));
      }
      dc.slab_count = parse_bigint(j.at("slab_counts").at(key).get<std::string>());
      dc.word_count = parse_bigint(j.at("word_counts").at(key).get<std::string>());
      dc.range_size = parse_bigint(j.at("range_sizes").at(key).get<std::string>());
      if (j.contains("projected_bounds") && j["projected_bounds"].contains(key)) {
        dc.projected_bound = parse_bigint(j["projected_bounds"][key].get<std::string>());
      }
      dc.tubes = tubes_per_slab(v, c.system.dimension(), c.system.base(), c.level);
      c.per_direction.push_back(std::move(dc));
    }
    c.tube_count = parse_bigint(j.at("tube_count").get<std::string>());
    c.total_width_bound = parse_fraction(j.at("total_width_bound").get<std::string>());
    return c;
  });
}

Json to_json(const GraphDirectedSystem& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    std::vector<int> reflect;
    for (bool r : e.isometry.reflect) reflect.push_back(r ? 1 : 0);
    edges.push_back({{"from", e.from}, {"to", e.to}, {"digit", e.digit},
                     {"perm", e.isometry.perm}, {"reflect", reflect}});
  }
  return {{"d", g.dimension()}, {"N", g.base()}, {"vertices", g.vertices()}, {"edges", edges}};
}

GraphDirectedSystem gds_from_json(const Json& j) {
  return guarded("gds", [&] {
    const int d = j.at("d").get<int>();
    std::vector<GdsEdge> edges;
    for (const auto& e : j.at("edges")) {
      Isometry a = Isometry::identity(d);
      if (e.contains("perm")) a.perm = int_vector(e["perm"]);
      if (e.contains("reflect")) {
        a.reflect.clear();
        for (const auto& r : e["reflect"]) {
          a.reflect.push_back(r.is_boolean() ? r.get<bool>() : r.get<int>() != 0);
        }
      }
      edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), int_vector(e.at("digit")), a});
    }
    return GraphDirectedSystem::create(d, j.at("N").get<int>(), j.at("vertices").get<int>(),
                                       std::move(edges));
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << text;
    if (!out) throw std::runtime_error("write to '" + tmp + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace tubenull
