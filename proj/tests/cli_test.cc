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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "twinbench/cli.h"
#include "twinbench/families.h"
#include "twinbench/serialize.h"
#include "twinbench/window.h"

namespace twinbench {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Invocation& r) { return Json::parse(r.out); }

// Minimal reader for the DOT subset the exporter promises: an undirected
// graph of quoted node statements followed by quoted edge statements.
struct DotGraph {
  std::string name;
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

std::optional<DotGraph> read_dot(const std::string& text) {
  static const std::regex header(R"re(^graph "((?:[^"\\]|\\.)*)" \{$)re");
  static const std::regex node(R"re(^  "((?:[^"\\]|\\.)*)";$)re");
  static const std::regex edge(
      R"re(^  "((?:[^"\\]|\\.)*)" -- "((?:[^"\\]|\\.)*)";$)re");
  std::istringstream in(text);
  std::string line;
  DotGraph g;
  std::smatch m;
  if (!std::getline(in, line) || !std::regex_match(line, m, header)) {
    return std::nullopt;
  }
  g.name = m[1];
  bool closed = false;
  while (std::getline(in, line)) {
    if (closed) return std::nullopt;
    if (line == "}") {
      closed = true;
    } else if (std::regex_match(line, m, edge)) {
      g.edges.emplace_back(m[1], m[2]);
    } else if (std::regex_match(line, m, node) && g.edges.empty()) {
      g.nodes.push_back(m[1]);
    } else {
      return std::nullopt;
    }
  }
  if (!closed) return std::nullopt;
  return g;
}

// --- serialization -------------------------------------------------------

TEST(WindowJson, RoundTripAllFamilies) {
  for (const std::string& name : family_names()) {
    for (std::size_t n : {1u, 50u, 500u}) {
      const Window w = window(*family_bundle(name).graph, n);
      const Json j = window_to_json(w);
      EXPECT_EQ(window_from_json(j), w) << name << " " << n;
      EXPECT_EQ(window_from_json_text(j.dump()), w) << name << " " << n;
    }
  }
}

TEST(WindowJson, FieldLayout) {
  const Json j = window_to_json(window(*ray_graph(), 3));
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys,
            (std::vector<std::string>{"family", "window", "vertices", "edges"}));
  EXPECT_EQ(j["family"], "ray");
  EXPECT_EQ(j["window"], 3);
  EXPECT_EQ(j["vertices"][0]["tag"], "r");
  EXPECT_EQ(j["vertices"][0]["coords"], Json::array({1}));
  EXPECT_EQ(j["edges"], Json::parse("[[0,1],[1,2]]"));
}

TEST(WindowJson, RejectsMalformedInput) {
  const Json good = window_to_json(window(*ray_graph(), 4));
  Json missing = good;
  missing.erase("edges");
  EXPECT_THROW(window_from_json(missing), std::invalid_argument);
  Json reversed = good;
  reversed["edges"][0] = Json::array({1, 0});
  EXPECT_THROW(window_from_json(reversed), std::invalid_argument);
  Json out_of_range = good;
  out_of_range["edges"][0] = Json::array({0, 9});
  EXPECT_THROW(window_from_json(out_of_range), std::invalid_argument);
  Json unordered = good;
  std::swap(unordered["edges"][0], unordered["edges"][1]);
  EXPECT_THROW(window_from_json(unordered), std::invalid_argument);
  EXPECT_THROW(window_from_json_text("{not json"), std::invalid_argument);
}

TEST(WindowDot, MatchesWindow) {
  for (const std::string& name : family_names()) {
    const Window w = window(*family_bundle(name).graph, 40);
    const auto dot = read_dot(window_to_dot(w));
    ASSERT_TRUE(dot.has_value()) << name;
    EXPECT_EQ(dot->name, name);
    ASSERT_EQ(dot->nodes.size(), w.vertices.size());
    ASSERT_EQ(dot->edges.size(), w.edges.size());
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
      EXPECT_EQ(dot->edges[i].first, to_string(w.vertices[w.edges[i].first]));
      EXPECT_EQ(dot->edges[i].second,
                to_string(w.vertices[w.edges[i].second]));
    }
  }
}

// --- commands ------------------------------------------------------------

TEST(Cli, FamiliesList) {
  const Invocation r = run({"families", "list", "--no-timing"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const Json j = json_of(r);
  ASSERT_EQ(j["families"].size(), 3u);
  EXPECT_FALSE(j["families"][0]["axioms"].empty());
}

TEST(Cli, RayDotHasThreeEdges) {
  const Invocation r =
      run({"window", "--family", "ray", "--size", "4", "--format", "dot"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto dot = read_dot(r.out);
  ASSERT_TRUE(dot.has_value()) << r.out;
  EXPECT_EQ(dot->edges.size(), 3u);
}

TEST(Cli, WindowJsonWithRemoval) {
  const Invocation r = run({"window", "--family", "extended-star", "--size", "30",
                     "--format", "json", "--remove", "union(P,image(f,P))"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const Window w = window_from_json_text(r.out);
  EXPECT_EQ(w.size, 30u);
  for (const VertexId& v : w.vertices) {
    EXPECT_NE(v, oracle::a(2, 4));
    EXPECT_NE(v, oracle::a(2, 9));
  }
}

TEST(Cli, WindowToFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "twinbench_cli_window.json";
  const Invocation r = run({"window", "--family", "clique-chain", "--size", "12",
                     "--format", "json", "--output", path.string()});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  EXPECT_EQ(window_from_json_text(text),
            window(*clique_chain_graph(), 12));
  std::filesystem::remove(path);
}

TEST(Cli, CheckIsoPassAndFail) {
  const Invocation ok = run({"check", "iso", "--family", "extended-star", "--map",
                      "f", "--window", "200", "--no-timing"});
  EXPECT_EQ(ok.code, kExitPass) << ok.err;
  EXPECT_EQ(json_of(ok)["verdict"], "pass");
  const Invocation g = run({"check", "iso", "--family", "extended-star", "--map",
                     "beta(0,1)*f*beta(0,1)", "--target-remove", "fH",
                     "--window", "200"});
  EXPECT_EQ(g.code, kExitPass) << g.out;
  const Invocation bad = run({"check", "iso", "--family", "extended-star", "--map",
                       "f", "--target-remove", "P", "--window", "100"});
  EXPECT_EQ(bad.code, kExitFail);
  EXPECT_EQ(json_of(bad)["verdict"], "fail");
}

TEST(Cli, CheckAlternating) {
  EXPECT_EQ(run({"check", "alternating", "--family", "clique-chain",
                 "--witness", "H", "--window", "200"})
                .code,
            kExitPass);
  EXPECT_EQ(run({"check", "alternating", "--family", "clique-chain",
                 "--witness", "H-clique-swap", "--window", "200"})
                .code,
            kExitFail);
  const Invocation unknown = run({"check", "alternating", "--family", "clique-chain",
                           "--witness", "nope"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("H-clique-swap"), std::string::npos);
}

TEST(Cli, CertifyCliqueChain) {
  const Invocation r = run({"twins", "certify", "--family", "clique-chain", "--max",
                     "5", "--scan", "12"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const Json j = json_of(r);
  EXPECT_EQ(j["distinct"], 10);
  EXPECT_EQ(j["certificates"].size(), 10u);
}

TEST(Cli, CertifyExtendedStarIsRefused) {
  const Invocation r = run({"twins", "certify", "--family", "extended-star", "--max",
                     "3", "--scan", "12"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.err.find("certificate inapplicable: Q infinite"),
            std::string::npos);
  EXPECT_EQ(json_of(r)["verdict"], "refused");
}

TEST(Cli, CertifySmallScanIsInconclusive) {
  const Invocation r = run({"twins", "certify", "--family", "clique-chain", "--max",
                     "5", "--scan", "4"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_EQ(json_of(r)["verdict"], "inconclusive");
}

TEST(Cli, TwinsBuildAndSurvey) {
  const Invocation b = run({"twins", "build", "--family", "clique-chain", "--index",
                     "3"});
  ASSERT_EQ(b.code, kExitPass) << b.err;
  EXPECT_EQ(json_of(b)["pieces"].size(), 3u);
  const Invocation s = run({"twins", "survey", "--family", "clique-chain", "--max",
                     "5", "--window", "60"});
  ASSERT_EQ(s.code, kExitPass) << s.err;
  for (const Json& e : json_of(s)["entries"]) {
    EXPECT_EQ(e["verdict"], "connected");
  }
}

TEST(Cli, TorsionScan) {
  const Invocation r = run({"torsion", "--family", "extended-star", "--witness", "H",
                     "--scan", "200"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_TRUE(json_of(r)["twisted"].empty());
}

TEST(Cli, UsageErrors) {
  const Invocation syntax = run({"check", "iso", "--family", "extended-star",
                          "--map", "f^"});
  EXPECT_EQ(syntax.code, kExitUsage);
  EXPECT_NE(syntax.err.find("column 3"), std::string::npos) << syntax.err;
  const Invocation name = run({"check", "iso", "--family", "extended-star", "--map",
                        "h"});
  EXPECT_EQ(name.code, kExitUsage);
  EXPECT_NE(name.err.find("alpha"), std::string::npos) << name.err;
  EXPECT_EQ(run({"window", "--family", "petersen", "--size", "3"}).code,
            kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"window", "--family", "ray", "--size", "3", "--format",
                 "png"})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"window", "--family", "ray", "--size", "3", "--remove",
                 "everything"})
                .code,
            kExitUsage);
}

TEST(Cli, HelpExitsCleanly) {
  const Invocation r = run({"--help"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("right to left"), std::string::npos);
}

TEST(Cli, WindowDefaultFromEnvironment) {
  ::setenv(kWindowEnvVar, "37", 1);
  const Invocation r = run({"check", "iso", "--family", "ray", "--map", "f"});
  ::unsetenv(kWindowEnvVar);
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(json_of(r)["report"]["window"], 37);
}

TEST(Cli, SeedIsRecorded) {
  const Invocation r = run({"families", "list", "--seed", "99"});
  EXPECT_EQ(json_of(r)["seed"], 99);
}

TEST(Cli, RerunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> invocations = {
      {"window", "--family", "clique-chain", "--size", "80", "--format",
       "json"},
      {"window", "--family", "extended-star", "--size", "80", "--format",
       "dot"},
      {"check", "iso", "--family", "clique-chain", "--map", "fstar",
       "--target-remove", "H", "--window", "150", "--no-timing"},
      {"twins", "certify", "--family", "clique-chain", "--max", "4", "--scan",
       "12", "--no-timing"},
      {"torsion", "--family", "clique-chain", "--witness", "H", "--scan", "80",
       "--no-timing"},
  };
  for (const auto& args : invocations) {
    const Invocation first = run(args), second = run(args);
    EXPECT_EQ(first.code, second.code);
    EXPECT_EQ(first.out, second.out) << args[0];
    EXPECT_FALSE(first.out.empty());
  }
}

}  // namespace
}  // namespace twinbench
