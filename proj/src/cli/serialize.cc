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

#include "twinbench/serialize.h"

#include <sstream>
#include <stdexcept>

namespace twinbench {
namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json violations(const ViolationList& list) {
  Json items = Json::array();
  for (const Violation& v : list.items) {
    Json item;
    item["first"] = to_string(v.first);
    if (v.second) item["second"] = to_string(*v.second);
    item["detail"] = v.detail;
    items.push_back(std::move(item));
  }
  return Json{{"count", list.count}, {"items", std::move(items)}};
}

}  // namespace

Json window_to_json(const Window& w) {
  Json j;
  j["family"] = w.family;
  j["window"] = w.size;
  Json verts = Json::array();
  for (const VertexId& v : w.vertices) {
    verts.push_back(Json{{"tag", v.tag}, {"coords", v.coords}});
  }
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (const auto& [a, b] : w.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

Window window_from_json(const Json& j) {
  try {
    Window w;
    w.family = j.at("family").get<std::string>();
    w.size = j.at("window").get<std::size_t>();
    for (const Json& v : j.at("vertices")) {
      w.vertices.emplace_back(v.at("tag").get<std::string>(),
                              v.at("coords").get<std::vector<Coord>>());
    }
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("edge must be a pair");
      }
      const auto a = e[0].get<std::size_t>();
      const auto b = e[1].get<std::size_t>();
      if (a >= b || b >= w.vertices.size()) {
        throw std::invalid_argument("edge indices out of order or range");
      }
      if (!w.edges.empty() && std::make_pair(a, b) <= w.edges.back()) {
        throw std::invalid_argument("edges are not ascending");
      }
      w.edges.emplace_back(a, b);
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed window: ") + e.what());
  }
}

Window window_from_json_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed window: ") + e.what());
  }
  return window_from_json(j);
}

std::string window_to_dot(const Window& w) {
  std::ostringstream out;
  out << "graph " << dot_quote(w.family) << " {\n";
  for (const VertexId& v : w.vertices) {
    out << "  " << dot_quote(to_string(v)) << ";\n";
  }
  for (const auto& [a, b] : w.edges) {
    out << "  " << dot_quote(to_string(w.vertices[a])) << " -- "
        << dot_quote(to_string(w.vertices[b])) << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const VertexId& v) {
  return Json{{"tag", v.tag}, {"coords", v.coords}};
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["verdict"] = r.pass() ? "pass" : "fail";
  j["window"] = r.window_size;
  j["checked_pairs"] = r.checked_pairs;
  j["violations"] = r.violation_count();
  j["membership"] = violations(r.membership);
  j["injectivity"] = violations(r.injectivity);
  j["inverse"] = violations(r.inverse);
  j["adjacency"] = violations(r.adjacency);
  j["non_adjacency"] = violations(r.non_adjacency);
  j["surjectivity"] = violations(r.surjectivity);
  j["set_image"] = violations(r.set_image);
  j["square"] = violations(r.square);
  j["off_support"] = violations(r.off_support);
  if (r.properness_witness) {
    j["properness_witness"] = to_string(*r.properness_witness);
  }
  j["notes"] = r.notes;
  return j;
}

Json to_json(const DeficiencyCount& d) {
  return Json{{"index", d.index},
              {"scan", d.scan},
              {"count", d.count},
              {"mixed", d.mixed},
              {"diagnostics", d.diagnostics}};
}

Json to_json(const NonIsoCertificate& c) {
  return Json{{"pair", Json::array({c.i, c.j})},
              {"scan", c.scan},
              {"counts", Json::array({c.count_i, c.count_j})},
              {"verdict", to_string(c.verdict)},
              {"diagnostics", c.diagnostics}};
}

}  // namespace twinbench
