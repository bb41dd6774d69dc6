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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tubenull/cover_builder.hpp"
#include "tubenull/digit_system.hpp"
#include "tubenull/direction_certifier.hpp"
#include "tubenull/reduction.hpp"

namespace tubenull {

using Json = nlohmann::json;

/// Malformed or schema-violating JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_decimal(const BigInt& x);
BigInt parse_bigint(const std::string& text);
/// Always "p/q", with q = 1 for integers.
std::string to_fraction(const BigRational& x);
/// Accepts "p/q" or "p".
BigRational parse_fraction(const std::string& text);

Json to_json(const DigitSystem& system);
DigitSystem system_from_json(const Json& j);

/// {"directions": [[...], ...]}
Json directions_to_json(const std::vector<Direction>& V);
std::vector<Direction> directions_from_json(const Json& j);

Json to_json(const DirectionCertificate& cert);
DirectionCertificate certificate_from_json(const Json& j);

Json to_json(const CoverCertificate& cover);
CoverCertificate cover_from_json(const Json& j);

Json to_json(const GraphDirectedSystem& g);
GraphDirectedSystem gds_from_json(const Json& j);

/// Reads and parses a JSON file; throws ParseError on I/O or syntax errors.
Json read_json_file(const std::string& path);

/// Writes `text` to `path` through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace tubenull
