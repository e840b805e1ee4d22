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

#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.h"
#include "twinbench/cli.h"
#include "twinbench/families.h"
#include "twinbench/morphism_expr.h"

namespace twinbench {
namespace {

using Kind = MorphismExpr::Kind;
using oracle::a;

std::vector<std::string> corpus() {
  std::ifstream in(TWINBENCH_CORPUS);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

TEST(Parse, PowerOfNamed) {
  const ExprPtr e = parse_morphism("f^2");
  ASSERT_EQ(e->kind, Kind::kPower);
  EXPECT_EQ(e->exponent, 2);
  ASSERT_EQ(e->lhs->kind, Kind::kNamed);
  EXPECT_EQ(e->lhs->name, "f");
}

TEST(Parse, CompositionIsLeftAssociative) {
  const ExprPtr e = parse_morphism("beta(0,1)*f*beta(0,1)");
  const ExprPtr want = MorphismExpr::compose(
      MorphismExpr::compose(MorphismExpr::beta(0, 1),
                            MorphismExpr::named("f")),
      MorphismExpr::beta(0, 1));
  EXPECT_TRUE(structurally_equal(*e, *want));
}

TEST(Parse, PowerBindsTighterThanComposition) {
  const ExprPtr e = parse_morphism("alpha*f^-1");
  ASSERT_EQ(e->kind, Kind::kCompose);
  ASSERT_EQ(e->rhs->kind, Kind::kPower);
  EXPECT_EQ(e->rhs->exponent, -1);
}

TEST(Parse, SpecialForms) {
  EXPECT_EQ(parse_morphism("id")->kind, Kind::kIdentity);
  const ExprPtr b = parse_morphism("beta(2,7)");
  ASSERT_EQ(b->kind, Kind::kBeta);
  EXPECT_EQ(b->i, 2);
  EXPECT_EQ(b->j, 7);
  EXPECT_EQ(parse_morphism("inv(f)")->kind, Kind::kInverse);
}

struct BadInput {
  const char* text;
  std::size_t column;
};

TEST(Parse, SyntaxErrorsCarryColumns) {
  for (const BadInput& c : std::vector<BadInput>{{"f^", 3},
                                                 {"", 1},
                                                 {"f*", 3},
                                                 {"*f", 1},
                                                 {"(f", 3},
                                                 {"f)", 2},
                                                 {"beta(1)", 7},
                                                 {"beta(1,x)", 8},
                                                 {"f^x", 3},
                                                 {"f g", 3},
                                                 {"inv()", 5},
                                                 {"f#", 2}}) {
    try {
      parse_morphism(c.text);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.column(), c.column) << "'" << c.text << "': " << e.what();
      EXPECT_NE(std::string(e.what()).find("at column"), std::string::npos);
    }
  }
}

TEST(Parse, UnknownIdentifierListsNames) {
  const std::vector<std::string> known = {"alpha", "f"};
  try {
    parse_morphism("alpha*h", &known);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("'h'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("alpha"), std::string::npos) << msg;
    EXPECT_NE(msg.find("f"), std::string::npos) << msg;
    EXPECT_EQ(e.column(), 7u);
  }
  EXPECT_NO_THROW(parse_morphism("id*beta(0,1)*f", &known));
}

TEST(Print, CanonicalForms) {
  EXPECT_EQ(print(*parse_morphism("  f  *  alpha")), "f*alpha");
  EXPECT_EQ(print(*parse_morphism("(alpha*f)*alpha")), "alpha*f*alpha");
  EXPECT_EQ(print(*parse_morphism("alpha*(f*alpha)")), "alpha*(f*alpha)");
  EXPECT_EQ(print(*parse_morphism("(f*g)^2")), "(f*g)^2");
  EXPECT_EQ(print(*parse_morphism("beta( 0 , 1 )")), "beta(0,1)");
}

TEST(RoundTrip, Corpus) {
  const auto cases = corpus();
  ASSERT_EQ(cases.size(), 50u);
  for (const std::string& s : cases) {
    const ExprPtr first = parse_morphism(s);
    const std::string text = print(*first);
    const ExprPtr again = parse_morphism(text);
    EXPECT_TRUE(structurally_equal(*first, *again)) << s << " -> " << text;
    EXPECT_EQ(print(*again), text);
  }
}

// Random trees over every node kind survive print then parse.
ExprPtr random_expr(oracle::Gen& gen, int depth) {
  const std::uint64_t pick = depth <= 0 ? gen.uniform(0, 2) : gen.uniform(0, 5);
  switch (pick) {
    case 0:
      return MorphismExpr::named(gen.coin() ? "f" : "alpha");
    case 1:
      return MorphismExpr::identity();
    case 2:
      return MorphismExpr::beta(static_cast<int>(gen.uniform(0, 9)),
                                static_cast<int>(gen.uniform(0, 9)));
    case 3:
      return MorphismExpr::compose(random_expr(gen, depth - 1),
                                   random_expr(gen, depth - 1));
    case 4:
      return MorphismExpr::power(random_expr(gen, depth - 1),
                                 static_cast<int>(gen.uniform(0, 20)) - 10);
    default:
      return MorphismExpr::inverse(random_expr(gen, depth - 1));
  }
}

TEST(RoundTrip, RandomTrees) {
  oracle::Gen gen(0x5eed03);
  for (int t = 0; t < 2'000; ++t) {
    const ExprPtr e = random_expr(gen, 5);
    const std::string text = print(*e);
    EXPECT_TRUE(structurally_equal(*e, *parse_morphism(text))) << text;
  }
}

TEST(Evaluator, MatchesDirectConstruction) {
  const FamilyBundle& b = family_bundle("extended-star");
  const Evaluator eval(environment_for(b));
  EXPECT_EQ(eval.evaluate("f^2")->apply(a(1, 2)), a(1, 5));
  EXPECT_EQ(eval.evaluate("beta(0,2)")->apply(a(1, 2)), a(1, 5));
  const MapPtr g = eval.evaluate("beta(0,1)*f*beta(0,1)");
  const MapPtr shipped = b.maps.at("g");
  for (const VertexId& v : b.graph->first(400)) {
    ASSERT_EQ(g->apply(v), shipped->apply(v));
  }
  const MapPtr back = eval.evaluate("inv(f)*f");
  for (const VertexId& v : b.graph->first(400)) ASSERT_EQ(back->apply(v), v);
  EXPECT_EQ(eval.evaluate("f^-1")->apply(a(2, 27)), a(2, 8));
}

TEST(Evaluator, MemoizesByCanonicalText) {
  const Evaluator eval(environment_for(family_bundle("clique-chain")));
  EXPECT_EQ(eval.evaluate("f * alpha"), eval.evaluate("(f)*alpha"));
}

TEST(Evaluator, ConcurrentUseIsConsistent) {
  const FamilyBundle& b = family_bundle("extended-star");
  const Evaluator eval(environment_for(b));
  std::vector<MapPtr> got(4);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < got.size(); ++t) {
    pool.emplace_back([&, t] { got[t] = eval.evaluate("alpha*f^3"); });
  }
  for (auto& th : pool) th.join();
  for (const MapPtr& m : got) {
    EXPECT_EQ(m->apply(a(1, 2)), got[0]->apply(a(1, 2)));
  }
}

TEST(Evaluator, RejectsBadReferences) {
  const Evaluator eval(environment_for(family_bundle("extended-star")));
  EXPECT_THROW(eval.evaluate("nope"), ParseError);
  EXPECT_THROW(eval.evaluate("beta(1,1)"), std::invalid_argument);
  EXPECT_THROW(eval.evaluate("f^65"), std::out_of_range);
}

}  // namespace
}  // namespace twinbench
