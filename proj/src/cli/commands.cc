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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "twinbench/cli.h"
#include "twinbench/errors.h"
#include "twinbench/serialize.h"
#include "twinbench/window.h"

namespace twinbench {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits at commas outside parentheses.
std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

std::optional<std::string_view> call_args(std::string_view s,
                                          std::string_view head) {
  if (s.size() < head.size() + 2 || s.substr(0, head.size()) != head ||
      s[head.size()] != '(' || s.back() != ')') {
    return std::nullopt;
  }
  return s.substr(head.size() + 1, s.size() - head.size() - 2);
}

std::size_t default_window() {
  if (const char* env = std::getenv(kWindowEnvVar)) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kVerifyWindow;
}

struct Options {
  std::string family;
  std::size_t size = 0;
  std::string format = "json";
  std::string remove_spec;
  std::string output;
  std::string map;
  std::string target_remove;
  std::string witness;
  std::size_t window = 0;
  std::size_t index = 1;
  std::size_t max = 0;
  std::size_t scan = 0;
  std::uint64_t seed = 0;
  bool no_timing = false;
};

// A report body plus the exit code it implies.
struct Outcome {
  Json body;
  int code = kExitPass;
};

class Runner {
 public:
  Runner(std::vector<std::string> args, std::ostream& out, std::ostream& err)
      : args_(std::move(args)), out_(out), err_(err) {}

  int run();

 private:
  int emit(const std::string& command, Outcome outcome,
            std::chrono::steady_clock::time_point start);

  Outcome families_list();
  int window_export();
  Outcome check_iso(const FamilyBundle& b);
  Outcome check_alternating(const FamilyBundle& b);
  Outcome twins_build(const FamilyBundle& b);
  Outcome twins_certify(const FamilyBundle& b);
  Outcome twins_survey(const FamilyBundle& b);
  Outcome torsion_scan(const FamilyBundle& b);

  std::vector<std::string> args_;
  std::ostream& out_;
  std::ostream& err_;
  Options opt_;
};

const TwinWitness& twin_of(const FamilyBundle& b) {
  if (!b.twin) {
    throw std::invalid_argument("family '" + b.name + "' has no twin data");
  }
  return *b.twin;
}

int Runner::run() {
  CLI::App app{
      "Workbench for finitely presented infinite graphs.\n"
      "Morphism expressions: names, id, beta(i,j), inv(e), e^k, a*b, (e).\n"
      "Composition a*b applies b first (right to left), as in a ∘ b.",
      "twinbench"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  app.add_option("--seed", opt_.seed, "Seed recorded in reports");
  app.add_flag("--no-timing", opt_.no_timing, "Omit timing from reports");
  const std::size_t window_default = default_window();
  opt_.window = window_default;

  auto add_family = [this](CLI::App* cmd) {
    cmd->add_option("--family", opt_.family, "Registered family name")
        ->required();
  };

  auto* families = app.add_subcommand("families", "Registered families");
  families->require_subcommand(1);
  auto* list = families->add_subcommand("list", "Names and declared axioms");

  auto* win = app.add_subcommand("window", "Export a finite window");
  add_family(win);
  win->add_option("--size", opt_.size, "Number of vertices")
      ->required()
      ->check(CLI::PositiveNumber);
  win->add_option("--format", opt_.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  win->add_option("--remove", opt_.remove_spec, "SPEC removed first");
  win->add_option("--output", opt_.output, "Write to a file");

  auto* check = app.add_subcommand("check", "Window verification");
  check->require_subcommand(1);
  auto* iso = check->add_subcommand("iso", "Check an isomorphism");
  add_family(iso);
  iso->add_option("--map", opt_.map, "Morphism expression")->required();
  iso->add_option("--target-remove", opt_.target_remove,
                  "Target is the family minus SPEC");
  iso->add_option("--window", opt_.window, "Window size")
      ->check(CLI::PositiveNumber);
  auto* alt = check->add_subcommand("alternating",
                                    "Check an alternating automorphism");
  add_family(alt);
  alt->add_option("--witness", opt_.witness, "Witness name")->required();
  alt->add_option("--window", opt_.window, "Window size")
      ->check(CLI::PositiveNumber);

  auto* twins = app.add_subcommand("twins", "Twin families");
  twins->require_subcommand(1);
  auto* build = twins->add_subcommand("build", "Build G_i");
  add_family(build);
  build->add_option("--index", opt_.index, "i >= 1")->required();
  auto* certify = twins->add_subcommand("certify", "Pairwise certificates");
  add_family(certify);
  certify->add_option("--max", opt_.max, "Largest index")->required();
  certify->add_option("--scan", opt_.scan, "Scan bound K")->required();
  auto* survey = twins->add_subcommand("survey", "Window connectivity");
  add_family(survey);
  survey->add_option("--max", opt_.max, "Largest index")->required();
  survey->add_option("--window", opt_.window, "Window size")
      ->check(CLI::PositiveNumber);

  auto* tor = app.add_subcommand("torsion", "Catalogue-relative torsion");
  add_family(tor);
  tor->add_option("--witness", opt_.witness, "Removable witness name")
      ->required();
  opt_.scan = kTorsionWindow;
  tor->add_option("--scan", opt_.scan, "Vertices scanned");

  std::vector<const char*> argv{"twinbench"};
  for (const auto& a : args_) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err_ << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (certify->parsed() && opt_.scan == 0) opt_.scan = 12;

  std::string command = "twinbench";
  for (const auto& a : args_) command += " " + a;
  const auto start = std::chrono::steady_clock::now();

  const FamilyBundle* bundle = nullptr;
  std::function<Outcome()> action;
  try {
    if (list->parsed()) {
      action = [this] { return families_list(); };
    } else if (win->parsed()) {
      return window_export();
    } else {
      bundle = &family_bundle(opt_.family);
      const FamilyBundle& b = *bundle;
      if (iso->parsed()) action = [&] { return check_iso(b); };
      if (alt->parsed()) action = [&] { return check_alternating(b); };
      if (build->parsed()) action = [&] { return twins_build(b); };
      if (certify->parsed()) action = [&] { return twins_certify(b); };
      if (survey->parsed()) action = [&] { return twins_survey(b); };
      if (tor->parsed()) action = [&] { return torsion_scan(b); };
    }
    return emit(command, action(), start);
  } catch (const InapplicableCertificate& e) {
    Outcome o;
    o.body["verdict"] = "refused";
    o.body["error"] = e.what();
    o.code = kExitFail;
    err_ << e.what() << "\n";
    return emit(command, std::move(o), start);
  } catch (const WitnessError& e) {
    Outcome o;
    o.body["verdict"] = "fail";
    o.body["error"] = e.what();
    if (e.first()) o.body["witness"] = to_string(*e.first());
    if (e.second()) o.body["witness_pair"] = to_string(*e.second());
    o.code = kExitFail;
    err_ << e.what() << "\n";
    return emit(command, std::move(o), start);
  } catch (const std::invalid_argument& e) {
    err_ << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

int Runner::emit(const std::string& command, Outcome outcome,
                 std::chrono::steady_clock::time_point start) {
  Json report;
  report["command"] = command;
  report["seed"] = opt_.seed;
  for (auto& [key, value] : outcome.body.items()) report[key] = value;
  if (!opt_.no_timing) {
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
  }
  out_ << report.dump(2) << "\n";
  return outcome.code;
}

Outcome Runner::families_list() {
  Outcome o;
  Json fams = Json::array();
  for (const auto& name : family_names()) {
    const FamilyBundle& b = family_bundle(name);
    Json f;
    f["name"] = name;
    f["axioms"] = b.axioms;
    Json rem = Json::array();
    for (const auto& w : b.rem) rem.push_back(w.name);
    f["removable_witnesses"] = rem;
    Json alts = Json::array();
    for (const auto& [n, w] : b.alternating) alts.push_back(n);
    f["alternating_witnesses"] = alts;
    f["expected_failures"] = b.expected_failures;
    Json specs = Json::array();
    for (const auto& [n, s] : b.specs) specs.push_back(n);
    f["specs"] = specs;
    f["maps"] = environment_for(b).names();
    f["twin"] = b.twin.has_value();
    fams.push_back(std::move(f));
  }
  o.body["families"] = std::move(fams);
  return o;
}

int Runner::window_export() {
  const FamilyBundle& b = family_bundle(opt_.family);
  GraphPtr g = b.graph;
  if (!opt_.remove_spec.empty()) {
    const Evaluator eval(environment_for(b));
    g = remove(g, parse_spec_arg(opt_.remove_spec, b, eval));
  }
  const Window w = window(*g, opt_.size);
  const std::string text = opt_.format == "dot"
                               ? window_to_dot(w)
                               : window_to_json(w).dump(2) + "\n";
  if (opt_.output.empty()) {
    out_ << text;
  } else {
    std::ofstream file(opt_.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + opt_.output);
    file << text;
  }
  return kExitPass;
}

Outcome Runner::check_iso(const FamilyBundle& b) {
  const Evaluator eval(environment_for(b));
  const MapPtr m = eval.evaluate(opt_.map);
  const GraphPtr target =
      opt_.target_remove.empty()
          ? m->target()
          : remove(b.graph, parse_spec_arg(opt_.target_remove, b, eval));
  const VerificationReport r =
      verify_iso_window(*m, *m->source(), *target, opt_.window);
  Outcome o;
  o.body["map"] = print(*parse_morphism(opt_.map));
  o.body["report"] = to_json(r);
  o.body["verdict"] = r.pass() ? "pass" : "fail";
  o.code = r.pass() ? kExitPass : kExitFail;
  return o;
}

Outcome Runner::check_alternating(const FamilyBundle& b) {
  const auto it = b.alternating.find(opt_.witness);
  if (it == b.alternating.end()) {
    std::string names;
    for (const auto& [n, w] : b.alternating) {
      names += (names.empty() ? "" : ", ") + n;
    }
    throw std::invalid_argument("unknown witness '" + opt_.witness +
                                "' (available: " + names + ")");
  }
  const VerificationReport r = verify_alternating(it->second, opt_.window);
  Outcome o;
  o.body["witness"] = opt_.witness;
  o.body["alpha"] = it->second.alpha->name();
  o.body["report"] = to_json(r);
  o.body["verdict"] = r.pass() ? "pass" : "fail";
  o.code = r.pass() ? kExitPass : kExitFail;
  return o;
}

Outcome Runner::twins_build(const FamilyBundle& b) {
  const TwinWitness& tw = twin_of(b);
  const TwinFamilyEntry e = twin_family(tw, opt_.index);
  Outcome o;
  o.body["index"] = e.index;
  o.body["graph"] = e.graph->family_id();
  o.body["removed"] = e.removed.to_string();
  Json pieces = Json::array();
  for (const auto& p : e.pieces) {
    const auto nf = normalize(p);
    std::string text = p.to_string();
    if (nf) {
      text.clear();
      for (const Atom& a : nf->atoms) {
        if (!text.empty()) text += " ∪ ";
        text += std::holds_alternative<VertexId>(a)
                    ? to_string(std::get<VertexId>(a))
                    : to_string(std::get<Box>(a));
      }
    }
    pieces.push_back(text);
  }
  o.body["pieces"] = std::move(pieces);
  o.body["ordinary"] = tw.ordinary.has_value();
  o.body["declared_nonremovable"] = tw.declared_nonremovable;
  o.body["verdict"] = "built";
  return o;
}

Outcome Runner::twins_certify(const FamilyBundle& b) {
  const TwinWitness& tw = twin_of(b);
  const auto certs = certify_pairwise_distinct(tw, opt_.max, opt_.scan);
  Outcome o;
  Json list = Json::array();
  std::size_t distinct = 0;
  for (const auto& c : certs) {
    if (c.verdict == NonIsoCertificate::Verdict::kDistinct) ++distinct;
    list.push_back(to_json(c));
  }
  o.body["max"] = opt_.max;
  o.body["scan"] = opt_.scan;
  o.body["certificates"] = std::move(list);
  o.body["distinct"] = distinct;
  o.body["total"] = certs.size();
  const bool all = distinct == certs.size();
  o.body["verdict"] = all ? "pass" : "inconclusive";
  o.code = all ? kExitPass : kExitFail;
  return o;
}

Outcome Runner::twins_survey(const FamilyBundle& b) {
  const TwinWitness& tw = twin_of(b);
  const auto it = b.maps.find("fstar");
  const MapPtr shift = it != b.maps.end() ? it->second : tw.base.map;
  Outcome o;
  Json entries = Json::array();
  for (const auto& e : connectivity_survey(tw, shift, opt_.max, opt_.window)) {
    entries.push_back(Json{{"index", e.index}, {"verdict", to_string(e.verdict)}});
  }
  o.body["shift"] = shift->name();
  o.body["window"] = opt_.window;
  o.body["entries"] = std::move(entries);
  o.body["verdict"] = "surveyed";
  return o;
}

Outcome Runner::torsion_scan(const FamilyBundle& b) {
  const RemovableWitness* w = nullptr;
  for (const auto& r : b.rem) {
    if (r.name == opt_.witness) w = &r;
  }
  if (w == nullptr) {
    std::string names;
    for (const auto& r : b.rem) names += (names.empty() ? "" : ", ") + r.name;
    throw std::invalid_argument("unknown witness '" + opt_.witness +
                                "' (available: " + names + ")");
  }
  if (!b.catalogue) {
    throw std::invalid_argument("family '" + b.name + "' has no catalogue");
  }
  const SubgraphSpec t = torsion(*w, *b.catalogue, opt_.scan);
  const auto& twisted = std::get<SubgraphSpec::Finite>(t.node()).vertices;
  std::size_t unknown = 0;
  for (const VertexId& v : w->graph->first(opt_.scan)) {
    if (is_twisted_vertex(v, *w, *b.catalogue) == Twist::kUnknown) ++unknown;
  }
  Outcome o;
  o.body["witness"] = w->name;
  o.body["scan"] = opt_.scan;
  Json list = Json::array();
  for (const VertexId& v : twisted) list.push_back(to_string(v));
  o.body["twisted"] = std::move(list);
  o.body["unknown"] = unknown;
  o.body["catalogue"] = Json{{"rem_g", b.catalogue->rem_g.size()},
                             {"rem_g_minus_h",
                              b.catalogue->rem_g_minus_h.size()}};
  o.body["verdict"] = twisted.empty() ? "empty" : "nonempty";
  o.code = twisted.empty() ? kExitPass : kExitFail;
  return o;
}

}  // namespace

Environment environment_for(const FamilyBundle& bundle) {
  Environment env;
  env.graph = bundle.graph;
  env.maps = bundle.maps;
  if (bundle.alt) {
    const AlternatingFamily fam = *bundle.alt;
    env.beta = [fam](int i, int j) {
      if (i < 0 || j < 0) {
        throw std::invalid_argument("beta indices are nonnegative");
      }
      return beta(fam, static_cast<std::size_t>(i),
                  static_cast<std::size_t>(j));
    };
  }
  return env;
}

SubgraphSpec parse_spec_arg(std::string_view text, const FamilyBundle& bundle,
                            const Evaluator& eval) {
  const std::string_view s = trim(text);
  if (const auto args = call_args(s, "union")) {
    std::vector<SubgraphSpec> parts;
    for (const auto part : split_top_level(*args)) {
      parts.push_back(parse_spec_arg(part, bundle, eval));
    }
    return SubgraphSpec::union_of(parts);
  }
  if (const auto args = call_args(s, "image")) {
    const auto parts = split_top_level(*args);
    if (parts.size() != 2) {
      throw std::invalid_argument("image takes (EXPR, SPEC)");
    }
    return SubgraphSpec::image(eval.evaluate(parts[0]),
                               parse_spec_arg(parts[1], bundle, eval));
  }
  if (auto it = bundle.specs.find(std::string(s)); it != bundle.specs.end()) {
    return it->second;
  }
  std::string names;
  for (const auto& [n, spec] : bundle.specs) {
    names += (names.empty() ? "" : ", ") + n;
  }
  throw std::invalid_argument("unknown spec '" + std::string(s) +
                              "' (available: " + names +
                              ", union(...), image(EXPR,SPEC))");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  return Runner(args, out, err).run();
}

}  // namespace twinbench
