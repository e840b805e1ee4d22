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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Windows and time limits are the stated ones and are not
// tunable from the command line.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twinbench/cli.h"
#include "twinbench/errors.h"
#include "twinbench/families.h"
#include "twinbench/morphism_expr.h"
#include "twinbench/selfcontain.h"
#include "twinbench/serialize.h"
#include "twinbench/twins.h"
#include "twinbench/window.h"

namespace twinbench {
namespace {

class CriterionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define REQUIRE(cond, msg)                                          \
  do {                                                              \
    if (!(cond)) {                                                  \
      std::ostringstream os_;                                       \
      os_ << msg;                                                   \
      throw CriterionFailed(os_.str() + " [" #cond "]");            \
    }                                                               \
  } while (0)

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

struct Criterion {
  int id;
  std::string title;
  std::function<std::string()> check;  // detail on success, throws on failure
};

VertexId a(Coord x, Coord j) { return VertexId{"a", {x, j}}; }

const FamilyBundle& star() { return family_bundle("extended-star"); }
const FamilyBundle& chain() { return family_bundle("clique-chain"); }

std::string c1_standard_isomorphism() {
  const auto start = Clock::now();
  const AlternatingFamily fam = extended_star_family();
  const MapPtr s = standard_isomorphism(fam);
  const auto r = verify_iso_window(*s, *fam.graph,
                                   *remove(fam.graph, fam.copy(0)), 500);
  const double t = seconds_since(start);
  REQUIRE(r.pass(), r.violation_count() << " violations");
  REQUIRE(r.window_size == 500, "window " << r.window_size);
  REQUIRE(t < 10.0, "took " << fmt_seconds(t));
  return std::to_string(r.checked_pairs) + " pairs, 0 violations, " +
         fmt_seconds(t);
}

std::string c2_shipped_shift() {
  const RemovableWitness& w = star().rem.front();
  const auto r =
      verify_iso_window(*w.map, *w.graph, *remove(w.graph, w.removed), 500);
  REQUIRE(r.pass(), r.violation_count() << " violations");
  const MapPtr f = star().maps.at("f");
  REQUIRE(f->apply(a(1, 8)) == a(1, 27), "f(a(1,8))");
  REQUIRE(f->apply(a(2, 49)) == a(2, 121), "f(a(2,49))");
  REQUIRE(f->apply(a(1, 6)) == a(1, 6), "f(a(1,6))");
  return "n=500 pass; a(1,8)->a(1,27), a(2,49)->a(2,121), a(1,6) fixed";
}

std::string c3_beta() {
  std::size_t checked = 0;
  for (const FamilyBundle* b : {&star(), &chain()}) {
    const auto win = b->graph->first(300);
    for (std::size_t i = 0; i <= 5; ++i) {
      for (std::size_t j = i + 1; j <= 5; ++j) {
        const MapPtr m = beta(*b->alt, i, j);
        const SubgraphSpec hi = b->alt->copy(i), hj = b->alt->copy(j);
        for (const VertexId& v : win) {
          const VertexId w = m->apply(v);
          REQUIRE(m->apply(w) == v, b->name << " " << m->name() << " moves "
                                            << to_string(v) << " under square");
          REQUIRE(!hi.contains(v) || hj.contains(w),
                  b->name << " " << m->name() << " " << to_string(v));
          REQUIRE(!hj.contains(v) || hi.contains(w),
                  b->name << " " << m->name() << " " << to_string(v));
        }
        ++checked;
      }
    }
  }
  return std::to_string(checked) + " maps (both families, i<j<=5), n=300";
}

std::string c4_disjoint_copies() {
  for (const FamilyBundle* b : {&star(), &chain()}) {
    const auto copies = disjoint_copies(b->rem.front(), 8);
    REQUIRE(copies.size() == 8, b->name);
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = i + 1; j < 8; ++j) {
        REQUIRE(spec_disjoint(copies[i], copies[j]).kind ==
                    DisjointVerdict::Kind::kDisjoint,
                b->name << " copies " << i << "," << j);
      }
    }
  }
  return "28 pairs per family, all exact";
}

std::string c5_compose_removable() {
  const RemovableWitness& wp = star().rem.front();
  const GraphPtr rest = wp.map->target();
  const RemovableWitness wq = make_removable_witness(
      "Q", rest,
      SubgraphSpec::coord_set("a", {make_in_set({1, 2}), PowersOf{3}}),
      restrict_to(extended_star_shift_from(2), rest));
  const RemovableWitness both = compose_removable(wp, wq);
  const auto r = verify_removable(both, 500);
  REQUIRE(r.pass(), r.violation_count() << " violations");
  return both.name + " verifies at n=500";
}

std::string c6_torsion() {
  std::size_t witnesses = 0;
  for (const FamilyBundle* b : {&star(), &chain()}) {
    for (const auto& [name, w] : b->alternating) {
      if (std::find(b->expected_failures.begin(), b->expected_failures.end(),
                    name) != b->expected_failures.end()) {
        continue;
      }
      REQUIRE(verify_alternating(w, kVerifyWindow).pass(), b->name << name);
      const SubgraphSpec t = torsion(w.base, *b->catalogue, 200);
      REQUIRE(spec_empty(t) == true, b->name << " " << name << " "
                                             << t.to_string());
      ++witnesses;
    }
  }
  REQUIRE(witnesses >= 2, "only " << witnesses << " witnesses");
  return std::to_string(witnesses) + " witnesses, scan 200, empty";
}

std::string c7_deficiency() {
  const auto start = Clock::now();
  const TwinWitness& tw = *chain().twin;
  for (std::size_t i = 1; i <= 8; ++i) {
    const DeficiencyCount d = deficiency_count(twin_family(tw, i), tw, 12);
    REQUIRE(d.count == i, "d_" << i << " = " << d.count);
  }
  std::ostringstream out, err;
  const int code = run_cli({"twins", "certify", "--family", "clique-chain",
                            "--max", "5", "--scan", "12"},
                           out, err);
  REQUIRE(code == kExitPass, "exit " << code << ": " << err.str());
  const Json j = Json::parse(out.str());
  REQUIRE(j["distinct"] == 10 && j["total"] == 10,
          j["distinct"] << "/" << j["total"]);
  const double t = seconds_since(start);
  REQUIRE(t < 5.0, "took " << fmt_seconds(t));
  return "d_i = i for i<=8; certify 10/10 distinct, " + fmt_seconds(t);
}

std::string c8_collapse() {
  const TwinWitness& tw = *star().twin;
  bool refused = false;
  try {
    certify_pairwise_distinct(tw, 3, 12);
  } catch (const InapplicableCertificate& e) {
    refused = std::string(e.what()) == "certificate inapplicable: Q infinite";
  }
  REQUIRE(refused, "certificate was not refused with Q infinite");
  for (std::size_t k = 2; k <= 5; ++k) {
    const MapPtr m = collapse_iso_extended_star(k);
    const auto r = verify_iso_window(*m, *m->source(), *m->target(), 400);
    REQUIRE(r.pass(), "k=" << k << ": " << r.violation_count()
                           << " violations");
  }
  return "refused (Q infinite); G_k -> G_1 verifies at n=400 for k=2..5";
}

std::string c9_survey() {
  const TwinWitness& tw = *chain().twin;
  const MapPtr fstar = chain().maps.at("fstar");
  const auto survey = connectivity_survey(tw, fstar, 8, 100);
  REQUIRE(survey.size() == 8, survey.size() << " entries");
  for (const SurveyEntry& e : survey) {
    REQUIRE(e.verdict == Connectivity::kConnected,
            "G_" << e.index << " " << to_string(e.verdict));
  }
  const SubgraphSpec h1 = chain().alt->copy(1);
  std::size_t sampled = 0;
  for (const VertexId& v : chain().graph->first(5'000)) {
    if (!h1.contains(v)) continue;
    REQUIRE(fstar->apply(v) == v, "f* moves " << to_string(v));
    ++sampled;
  }
  REQUIRE(sampled > 50, "only " << sampled << " samples");
  return "G_1..G_8 connected at n=100; f* fixes " + std::to_string(sampled) +
         " sampled H_1 vertices";
}

std::string c10_round_trips() {
  for (const std::string& name : family_names()) {
    for (std::size_t n : {1u, 50u, 500u}) {
      const Window w = window(*family_bundle(name).graph, n);
      REQUIRE(window_from_json_text(window_to_json(w).dump()) == w,
              name << " n=" << n);
    }
  }
  std::ifstream in(TWINBENCH_CORPUS);
  std::size_t cases = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const ExprPtr e = parse_morphism(line);
    REQUIRE(structurally_equal(*e, *parse_morphism(print(*e))), line);
    ++cases;
  }
  REQUIRE(cases == 50, cases << " corpus cases");
  const std::vector<std::vector<std::string>> runs = {
      {"window", "--family", "extended-star", "--size", "500", "--format",
       "json"},
      {"window", "--family", "clique-chain", "--size", "200", "--format",
       "dot"},
      {"check", "iso", "--family", "extended-star", "--map", "f",
       "--target-remove", "H", "--window", "300", "--no-timing"},
      {"twins", "certify", "--family", "clique-chain", "--max", "5", "--scan",
       "12", "--no-timing"},
  };
  for (const auto& args : runs) {
    std::ostringstream o1, o2, e1, e2;
    const int c1 = run_cli(args, o1, e1);
    const int c2 = run_cli(args, o2, e2);
    REQUIRE(c1 == c2 && o1.str() == o2.str() && !o1.str().empty(),
            "rerun differs: " << args[0] << " " << args[1]);
  }
  return "JSON n in {1,50,500} x 3 families; 50/50 expressions; " +
         std::to_string(runs.size()) + " byte-identical reruns";
}

}  // namespace
}  // namespace twinbench

int main() {
  using namespace twinbench;
  const std::vector<Criterion> criteria = {
      {1, "standard isomorphism, extended-star columns", c1_standard_isomorphism},
      {2, "prime-power shift on the extended star", c2_shipped_shift},
      {3, "beta involution and swap", c3_beta},
      {4, "eight disjoint copies", c4_disjoint_copies},
      {5, "union witness from P and Q", c5_compose_removable},
      {6, "torsion of shipped witnesses", c6_torsion},
      {7, "clique-chain deficiency certificate", c7_deficiency},
      {8, "extended-star collapse and refusal", c8_collapse},
      {9, "fixed-first connectivity survey", c9_survey},
      {10, "round trips and determinism", c10_round_trips},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string status = "PASS";
    std::string detail;
    try {
      detail = c.check();
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = e.what();
      ++failed;
    }
    std::cout << "[" << status << "] criterion " << c.id << ": " << c.title
              << " -- " << detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
