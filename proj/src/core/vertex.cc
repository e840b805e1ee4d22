// Copyright 2026 The Twinbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twinbench/vertex.h"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace twinbench {

std::string to_string(const VertexId& v) {
  std::string out = v.tag;
  out += '(';
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v.coords[i]);
  }
  out += ')';
  return out;
}

VertexId parse_vertex(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || open == 0 || text.back() != ')') {
    throw std::invalid_argument("vertex must look like tag(c1,...): '" +
                                std::string(text) + "'");
  }
  VertexId v;
  v.tag = std::string(text.substr(0, open));
  for (char c : v.tag) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      throw std::invalid_argument("bad character in vertex tag: '" + v.tag +
                                  "'");
    }
  }
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    Coord value = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw std::invalid_argument("bad vertex coordinate '" +
                                  std::string(item) + "'");
    }
    v.coords.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw std::invalid_argument("trailing comma in vertex");
  }
  return v;
}

std::size_t VertexIdHash::operator()(const VertexId& v) const noexcept {
  std::size_t h = std::hash<std::string>{}(v.tag);
  for (Coord c : v.coords) {
    h ^= std::hash<Coord>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace twinbench
