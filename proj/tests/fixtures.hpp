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

#include <string>
#include <vector>

#include "tubenull/digit_system.hpp"
#include "tubenull/projection.hpp"

#ifndef TUBENULL_TEST_DATA
#define TUBENULL_TEST_DATA "tests/data"
#endif

namespace fixtures {

inline std::string data(const std::string& name) {
  return std::string(TUBENULL_TEST_DATA) + "/" + name;
}

inline tubenull::DigitSystem carpet() {
  std::vector<tubenull::Digit> digits;
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) {
      if (x != 1 || y != 1) digits.push_back({x, y});
    }
  }
  return tubenull::DigitSystem::create(2, 3, digits);
}

inline tubenull::DigitSystem menger() {
  std::vector<tubenull::Digit> digits;
  for (int z = 0; z < 3; ++z) {
    for (int y = 0; y < 3; ++y) {
      for (int x = 0; x < 3; ++x) {
        if ((x == 1) + (y == 1) + (z == 1) < 2) digits.push_back({x, y, z});
      }
    }
  }
  return tubenull::DigitSystem::create(3, 3, digits);
}

inline std::vector<tubenull::Direction> directions(std::vector<std::vector<int>> vs) {
  std::vector<tubenull::Direction> out;
  for (auto& v : vs) out.push_back(tubenull::Direction::create(v));
  return out;
}

inline std::vector<tubenull::Direction> v4() {
  return directions({{1, 0}, {0, 1}, {1, 1}, {1, -1}});
}

// Every word of length n, symbol 0 most significant.
template <typename F>
void for_each_word(std::size_t m, int n, F&& f) {
  tubenull::Word w{std::vector<int>(n, 0)};
  while (true) {
    f(w);
    int j = n - 1;
    while (j >= 0 && w.symbols[j] == static_cast<int>(m) - 1) w.symbols[j--] = 0;
    if (j < 0) return;
    ++w.symbols[j];
  }
}

}  // namespace fixtures
