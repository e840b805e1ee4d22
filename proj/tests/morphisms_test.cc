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

#include <string>
#include <vector>

#include "oracles.h"
#include "twinbench/errors.h"
#include "twinbench/families.h"
#include "twinbench/selfcontain.h"
#include "twinbench/twins.h"
#include "twinbench/verify.h"
#include "twinbench/vertex_map.h"

namespace twinbench {
namespace {

using oracle::a;
using oracle::k;
using oracle::o;

const FamilyBundle& star() { return family_bundle("extended-star"); }
const FamilyBundle& chain() { return family_bundle("clique-chain"); }

// Members of the map's source drawn from the family's generator.
std::vector<VertexId> sample_members(const MapPtr& m, bool clique,
                                     std::size_t count, std::uint64_t seed) {
  oracle::Gen gen(seed);
  std::vector<VertexId> out;
  while (out.size() < count) {
    VertexId v = clique ? gen.clique_vertex() : gen.star_vertex();
    if (m->source()->contains(v)) out.push_back(std::move(v));
  }
  return out;
}

TEST(Apply, Examples) {
  const MapPtr f = star().maps.at("f");
  EXPECT_EQ(f->apply(a(1, 8)), a(1, 27));
  EXPECT_EQ(f->apply(a(1, 6)), a(1, 6));
  EXPECT_EQ(f->apply(a(2, 49)), a(2, 121));
  EXPECT_EQ(chain().maps.at("f")->apply(k(4, 9)), k(4, 10));
  EXPECT_EQ(chain().maps.at("f")->apply(o()), o());
}

TEST(Apply, MatchesShiftOracle) {
  const MapPtr f = star().maps.at("f");
  for (const VertexId& v : sample_members(f, false, 2'000, 11)) {
    ASSERT_EQ(f->apply(v), oracle::star_shift(v)) << to_string(v);
  }
}

TEST(Apply, RejectsNonMembers) {
  const MapPtr back = inverse(star().maps.at("f"));
  try {
    back->apply(a(1, 2));
    FAIL() << "expected NotAMember";
  } catch (const NotAMember& e) {
    EXPECT_EQ(e.vertex(), a(1, 2));
  }
  EXPECT_THROW(star().maps.at("f")->apply(a(3, 2)), NotAMember);
}

TEST(Power, Examples) {
  const MapPtr f = star().maps.at("f");
  EXPECT_EQ(power(f, 2)->apply(a(1, 2)), a(1, 5));
  EXPECT_EQ(power(f, 3)->apply(a(2, 4)), a(2, 49));
  const MapPtr zero = power(f, 0);
  for (const VertexId& v : sample_members(f, false, 200, 12)) {
    EXPECT_EQ(zero->apply(v), v);
  }
  EXPECT_EQ(power(f, -1)->apply(a(1, 27)), a(1, 8));
  EXPECT_THROW(power(f, kMaxPower + 1), std::out_of_range);
  EXPECT_NO_THROW(power(f, -kMaxPower));
}

TEST(Power, NegativePowerIsInverse) {
  const MapPtr f = chain().maps.at("f");
  const MapPtr lhs = power(f, -1), rhs = inverse(f);
  for (const VertexId& v : sample_members(lhs, true, 500, 13)) {
    EXPECT_EQ(lhs->apply(v), rhs->apply(v));
  }
}

TEST(Compose, InverseLawOnSamples) {
  for (const FamilyBundle* b : {&star(), &chain()}) {
    const MapPtr f = b->maps.at("f");
    const MapPtr id = compose(inverse(f), f);
    const bool clique = b == &chain();
    for (const VertexId& v : sample_members(f, clique, 1'000, 14)) {
      ASSERT_EQ(id->apply(v), v) << to_string(v);
    }
  }
}

TEST(Compose, CoherenceOnSamples) {
  for (const FamilyBundle* b : {&star(), &chain()}) {
    const MapPtr f = b->maps.at("f");
    const MapPtr alpha = b->maps.at("alpha");
    const MapPtr both = compose(alpha, f);
    const bool clique = b == &chain();
    for (const VertexId& v : sample_members(f, clique, 1'000, 15)) {
      ASSERT_EQ(both->apply(v), alpha->apply(f->apply(v))) << to_string(v);
    }
  }
}

TEST(Compose, AssociativeUnderEvaluation) {
  const MapPtr f = star().maps.at("f");
  const MapPtr alpha = star().maps.at("alpha");
  const MapPtr left = compose(compose(alpha, f), alpha);
  const MapPtr right = compose(alpha, compose(f, alpha));
  for (const VertexId& v : sample_members(f, false, 1'000, 16)) {
    ASSERT_EQ(left->apply(v), right->apply(v));
  }
}

TEST(Compose, FamilyMismatch) {
  EXPECT_THROW(compose(star().maps.at("f"), chain().maps.at("f")),
               FamilyMismatch);
}

// Every registered map: backward(forward(v)) == v on source samples and
// forward(backward(w)) == w on target samples; identity off support.
TEST(RoundTrip, AllShippedMaps) {
  for (const FamilyBundle* b : {&star(), &chain()}) {
    const bool clique = b == &chain();
    for (const auto& [name, m] : b->maps) {
      for (const VertexId& v : sample_members(m, clique, 1'000, 17)) {
        const VertexId w = m->apply(v);
        ASSERT_TRUE(m->target()->contains(w)) << name << " " << to_string(v);
        ASSERT_EQ(m->preimage(w), v) << name << " " << to_string(v);
        if (!m->support().contains(v)) {
          ASSERT_EQ(w, v) << name << " moves off-support " << to_string(v);
        }
      }
      oracle::Gen gen(18);
      for (int t = 0; t < 1'000; ++t) {
        const VertexId w = clique ? gen.clique_vertex() : gen.star_vertex();
        if (!m->target()->contains(w)) continue;
        const auto u = m->preimage(w);
        if (u) {
          ASSERT_EQ(m->apply(*u), w) << name << " " << to_string(w);
        }
      }
    }
  }
}

TEST(VerifyIso, IdentityPasses) {
  for (const GraphPtr& g :
       {extended_star_graph(), clique_chain_graph(), ray_graph()}) {
    const auto r = verify_iso_window(*identity_map(g), *g, *g, 150);
    EXPECT_TRUE(r.pass()) << g->family_id();
    EXPECT_EQ(r.checked_pairs, 150u * 149u / 2);
  }
}

TEST(VerifyIso, ShiftPassesAtFiveHundred) {
  for (const FamilyBundle* b : {&star(), &chain()}) {
    const RemovableWitness& w = b->rem.front();
    const auto r = verify_iso_window(*w.map, *w.graph,
                                     *remove(w.graph, w.removed), 500);
    EXPECT_TRUE(r.pass()) << b->name << " " << r.violation_count();
    EXPECT_EQ(r.window_size, 500u);
    EXPECT_FALSE(r.notes.empty());
  }
}

TEST(VerifyIso, BetasPassAtFiveHundred) {
  for (const FamilyBundle* b : {&star(), &chain()}) {
    for (std::size_t i = 0; i <= 5; ++i) {
      for (std::size_t j = i + 1; j <= 5; ++j) {
        const MapPtr m = beta(*b->alt, i, j);
        const auto r = verify_iso_window(*m, *b->graph, *b->graph, 500);
        EXPECT_TRUE(r.pass()) << b->name << " " << m->name();
      }
    }
  }
}

TEST(VerifyIso, MutationGivesOneAdjacencyViolation) {
  const MapPtr f = star().maps.at("f");
  MapParts parts = f->parts();
  parts.name = "f-corrupt";
  const VertexId moved = a(2, 6), spare = a(2, 1000);
  parts.forward = [f, moved, spare](const VertexId& v) {
    return v == moved ? spare : f->apply_unchecked(v);
  };
  parts.backward = [f, moved, spare](
                       const VertexId& w) -> std::optional<VertexId> {
    if (w == spare) return moved;
    if (w == moved) return std::nullopt;
    return f->preimage(w);
  };
  const MapPtr bad = make_map(std::move(parts));
  const auto r = verify_iso_window(*bad, *f->source(), *f->target(), 500);
  EXPECT_FALSE(r.pass());
  ASSERT_EQ(r.adjacency.count, 1u);
  EXPECT_EQ(r.adjacency.items[0].first, a(1, 6));
  EXPECT_EQ(r.adjacency.items[0].second, moved);
  EXPECT_TRUE(r.non_adjacency.empty());
  EXPECT_TRUE(r.injectivity.empty());
  EXPECT_TRUE(r.inverse.empty());
  // a(2,6) lost its preimage, which the proxy also reports.
  ASSERT_EQ(r.surjectivity.count, 1u);
  EXPECT_EQ(r.surjectivity.items[0].first, moved);
}

TEST(VerifyIso, ViolationListsAreCapped) {
  const GraphPtr g = extended_star_graph();
  // Sends every a(1,j) to itself and o to a(2,1): breaks all star edges.
  const auto broken = make_map(MapParts{
      .name = "broken",
      .source = g,
      .target = g,
      .forward = [](const VertexId& v) { return v == o() ? a(2, 1) : v; },
      .backward = [](const VertexId& w) -> std::optional<VertexId> {
        return w == a(2, 1) ? o() : w;
      },
      .support = SubgraphSpec::finite({o()}),
      .image_of_box = nullptr,
      .preimage_of_box = nullptr,
  });
  const auto r = verify_iso_window(*broken, *g, *g, 200);
  EXPECT_GT(r.adjacency.count, kMaxListedViolations);
  EXPECT_EQ(r.adjacency.items.size(), kMaxListedViolations);
  EXPECT_FALSE(r.pass());
}

TEST(Restrict, AlphaOnSecondTwinAlternatesQ) {
  const TwinWitness& tw = *star().twin;
  const TwinFamilyEntry g2 = twin_family(tw, 2);
  const MapPtr f = tw.base.map;
  const MapPtr bar = restrict_to(star().maps.at("alpha"), g2.graph);
  EXPECT_EQ(bar->source(), g2.graph);
  for (unsigned e = 1; e <= 6; ++e) {
    const VertexId q = a(1, oracle::ipow(2, e));
    EXPECT_EQ(bar->apply(q), f->apply(q));
    EXPECT_EQ(bar->apply(bar->apply(q)), q);
  }
  for (const VertexId& v : {o(), a(1, 5), a(1, 6), a(2, 7)}) {
    EXPECT_EQ(bar->apply(v), v);
  }
  const auto r = verify_iso_window(*bar, *g2.graph, *g2.graph, 300);
  EXPECT_TRUE(r.pass());
}

TEST(Restrict, IdentityAndShiftAvoidingHub) {
  const GraphPtr g = extended_star_graph();
  const GraphPtr no_hub = remove(g, SubgraphSpec::finite({o()}));
  const MapPtr id = restrict_to(identity_map(g), no_hub);
  for (const VertexId& v : no_hub->first(100)) EXPECT_EQ(id->apply(v), v);
  EXPECT_NO_THROW(restrict_to(star().maps.at("f"), no_hub, 200));
}

TEST(Restrict, EscapingImageIsAnError) {
  const GraphPtr g = extended_star_graph();
  const GraphPtr sub = remove(g, SubgraphSpec::finite({a(1, 3)}));
  try {
    restrict_to(star().maps.at("f"), sub, 200);
    FAIL() << "expected WitnessError";
  } catch (const WitnessError& e) {
    EXPECT_EQ(e.first(), a(1, 2));
    EXPECT_EQ(e.second(), a(1, 3));
  }
}

TEST(Lift, IdentityLiftsToIdentity) {
  const GraphPtr g = extended_star_graph();
  const GraphPtr sub = remove(g, SubgraphSpec::finite({a(2, 4)}));
  const MapPtr lifted = lift_by_identity(identity_map(sub), g);
  for (const VertexId& v : g->first(200)) EXPECT_EQ(lifted->apply(v), v);
}

// The alternating map restricted to G_2 moves Q, whose vertices touch W, so
// the boundary precondition refuses it.
TEST(Lift, RestrictedAlphaViolatesBoundary) {
  const TwinWitness& tw = *star().twin;
  const TwinFamilyEntry g2 = twin_family(tw, 2);
  const MapPtr bar = restrict_to(star().maps.at("alpha"), g2.graph);
  try {
    lift_by_identity(bar, extended_star_graph());
    FAIL() << "expected WitnessError";
  } catch (const WitnessError& e) {
    ASSERT_TRUE(e.first() && e.second());
    EXPECT_TRUE(g2.removed.contains(*e.first()));
    EXPECT_TRUE(extended_star_graph()->adjacent(*e.first(), *e.second()));
  }
}

TEST(Lift, SwapOfLaterCopiesFixesW) {
  const FamilyBundle& b = star();
  const TwinFamilyEntry g2 = twin_family(*b.twin, 2);
  const MapPtr swap = restrict_to(beta(*b.alt, 2, 3), g2.graph);
  const MapPtr lifted = lift_by_identity(swap, b.graph, 300);
  for (const VertexId& v : b.graph->first(400)) {
    if (g2.removed.contains(v)) {
      ASSERT_EQ(lifted->apply(v), v);
    }
  }
  EXPECT_EQ(lifted->apply(a(1, 5)), a(1, 7));
  EXPECT_TRUE(verify_iso_window(*lifted, *b.graph, *b.graph, 300).pass());
}

TEST(Lift, SwapTouchingBoundaryIsRefused) {
  const GraphPtr g = extended_star_graph();
  const GraphPtr sub = remove(g, SubgraphSpec::finite({a(2, 4)}));
  const VertexId x = a(1, 4), y = a(1, 8);
  const auto swap = make_map(MapParts{
      .name = "swap",
      .source = sub,
      .target = sub,
      .forward =
          [x, y](const VertexId& v) { return v == x ? y : v == y ? x : v; },
      .backward = [x, y](const VertexId& w) -> std::optional<VertexId> {
        return w == x ? y : w == y ? x : w;
      },
      .support = SubgraphSpec::finite({x, y}),
      .image_of_box = nullptr,
      .preimage_of_box = nullptr,
  });
  try {
    lift_by_identity(swap, g);
    FAIL() << "expected WitnessError";
  } catch (const WitnessError& e) {
    EXPECT_EQ(e.first(), a(2, 4));
    EXPECT_EQ(e.second(), x);
  }
}

TEST(Lift, RequiresARemovalOfTheTarget) {
  EXPECT_THROW(lift_by_identity(star().maps.at("f"), extended_star_graph()),
               std::invalid_argument);
}

TEST(VerifyEmbedding, InclusionIsProper) {
  const TwinWitness& tw = *star().twin;
  const StrongTwin st = strong_twin(tw);
  const auto r = verify_embedding_window(*st.embed_up, *st.graph, *tw.base.graph,
                                         300);
  EXPECT_TRUE(r.pass());
  ASSERT_TRUE(r.properness_witness.has_value());
  EXPECT_FALSE(st.graph->contains(*r.properness_witness));
}

TEST(VerifyEmbedding, MissingProperWitnessFails) {
  const GraphPtr g = ray_graph();
  const auto r = verify_embedding_window(*identity_map(g), *g, *g, 50);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.properness_witness.has_value());
  const auto lax = verify_embedding_window(*identity_map(g), *g, *g, 50, false);
  EXPECT_TRUE(lax.pass());
}

}  // namespace
}  // namespace twinbench
