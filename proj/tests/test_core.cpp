#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sqcore/core_builder.hpp"
#include "sqcore/instances.hpp"

using namespace sqcore;

namespace {

std::string key(const TreeEdge& e) { return e.deck.str() + "/" + std::to_string(e.edge); }
std::string key(const TreeVertex& v) { return v.deck.str() + "/" + std::to_string(v.vertex); }

std::set<std::string> keys(const std::vector<TreeEdge>& es) {
  std::set<std::string> out;
  for (const auto& e : es) out.insert(key(e));
  return out;
}

bool connected(const MarkedGraph& g, const std::vector<TreeEdge>& es) {
  if (es.empty()) return false;
  std::vector<bool> reached(es.size(), false);
  std::set<std::string> frontier{key(g.tail(es[0])), key(g.head(es[0]))};
  reached[0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (reached[i]) continue;
      if (frontier.count(key(g.tail(es[i]))) || frontier.count(key(g.head(es[i])))) {
        reached[i] = grew = true;
        frontier.insert(key(g.tail(es[i])));
        frontier.insert(key(g.head(es[i])));
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

int euler(const VHComplex& c) { return c.vertex_count() - c.edge_count() + c.square_count(); }

}  // namespace

TEST(Hypothesis, EqualTreesAreRejected) {
  const auto a = std2a();
  const auto w = check_hypothesis(a, a);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(a.half_space(w->t1).same_partition(a.half_space(w->t2)));
  EXPECT_THROW(build_core(a, a), HypothesisViolated);
}

TEST(Hypothesis, ConjugatedMarkingIsRejected) {
  for (const auto& g : {std2a(), ring_graph(3), random_instance(3, 4, 5).t2}) {
    const auto h = conjugated(g, Word::parse(g.genus(), "a"));
    const auto w = check_hypothesis(g, h);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(g.half_space(w->t1).same_partition(h.half_space(w->t2)));
    try {
      build_core(g, h);
      FAIL();
    } catch (const HypothesisViolated& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kHypothesisViolated);
      EXPECT_FALSE(e.witness().text.empty());
    }
  }
}

TEST(Hypothesis, ThetaPairWithSharedSplit) {
  // x in the first graph and t in the second both cut off C(a).
  const auto w = check_hypothesis(std2a(), std2b());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(std2a().half_space(w->t1).plus.str(), "{a}");
  EXPECT_TRUE(std2a().half_space(w->t1).same_partition(std2b().half_space(w->t2)));
}

TEST(Hypothesis, ZeroMovesAlwaysViolates) {
  for (int seed = 0; seed < 5; ++seed) {
    const auto inst = random_instance(2 + seed % 2, seed, 0);
    EXPECT_TRUE(check_hypothesis(inst.t1, inst.t2).has_value());
  }
}

TEST(Hypothesis, AcceptedPairsShareNoSplitInABall) {
  for (int seed = 0; seed < 6; ++seed) {
    const auto inst = random_instance(2 + seed % 2, seed, 4);
    ASSERT_FALSE(check_hypothesis(inst.t1, inst.t2).has_value());
    std::vector<Bipartition> p2;
    for (const auto& f : ball_edges(inst.t2, 5)) p2.push_back(inst.t2.half_space(f));
    for (int e = 0; e < inst.t1.edge_count(); ++e) {
      const Bipartition p = inst.t1.half_space(TreeEdge{Word(inst.t1.genus()), e, true});
      for (const auto& q : p2) EXPECT_FALSE(p.same_partition(q));
    }
  }
}

TEST(Fiber, NonEmptyConnectedAndCrossing) {
  std::vector<std::pair<MarkedGraph, MarkedGraph>> pairs{{std2a(), std2c()}};
  for (int seed = 0; seed < 6; ++seed) {
    auto inst = random_instance(2 + seed % 2, seed, 5);
    pairs.emplace_back(inst.t1, inst.t2);
  }
  for (const auto& [t1, t2] : pairs) {
    CoreContext ctx(t1, t2);
    for (const auto& e : ball_edges(t1, 2)) {
      const auto fib = ctx.fiber(e);
      ASSERT_FALSE(fib.empty());
      EXPECT_TRUE(connected(t2, fib));
      for (const auto& f : fib) EXPECT_TRUE(non_nested(t1.half_space(e), t2.half_space(f)));
      EXPECT_EQ(keys(ctx.fiber(e.reversed())), keys(fib));
    }
  }
}

TEST(Fiber, IsEquivariant) {
  const auto inst = random_instance(3, 2, 4);
  CoreContext ctx(inst.t1, inst.t2);
  const Word h = Word::parse(3, "bA");
  const Word moved = ctx.transition().apply(h);
  for (int e = 0; e < inst.t1.edge_count(); ++e) {
    const TreeEdge base{Word(3), e, true};
    std::vector<TreeEdge> shifted;
    for (const auto& f : ctx.fiber(base)) shifted.push_back(translate(moved, f));
    EXPECT_EQ(keys(ctx.fiber(translate(h, base))), keys(shifted));
  }
}

TEST(VertexFiber, UnionOfIncidentEdgeFibers) {
  std::vector<std::pair<MarkedGraph, MarkedGraph>> pairs{{std2a(), std2c()}};
  for (int seed = 0; seed < 4; ++seed) {
    auto inst = random_instance(2 + seed % 2, seed, 5);
    pairs.emplace_back(inst.t1, inst.t2);
  }
  for (const auto& [t1, t2] : pairs) {
    CoreContext ctx(t1, t2);
    std::vector<TreeVertex> verts{t1.base_vertex()};
    for (const auto& e : ball_edges(t1, 2)) verts.push_back(t1.head(e));
    for (const auto& v : verts) {
      std::set<std::string> expected;
      for (const auto& e : t1.cover_neighbors(v)) {
        const auto k = keys(ctx.fiber(e));
        expected.insert(k.begin(), k.end());
      }
      const auto vf = ctx.vertex_fiber(v);
      EXPECT_EQ(keys(vf), expected);
      EXPECT_TRUE(connected(t2, vf));
    }
  }
}

TEST(BuildCore, ThetaPair) {
  const auto r = build_core(std2a(), std2c());
  const auto& c = r.complex;
  EXPECT_EQ(euler(c), -1);
  EXPECT_EQ(c.genus(), 2);
  EXPECT_GT(c.square_count(), 0);
  int fiber_total = 0;
  for (const auto& f : r.fibers) fiber_total += static_cast<int>(f.size());
  EXPECT_EQ(c.square_count(), fiber_total);
  EXPECT_EQ(VHComplex::parse(c.serialize()).serialize(), c.serialize());
}

TEST(BuildCore, EulerCharacteristicAndSymmetry) {
  for (int seed = 0; seed < 12; ++seed) {
    const int g = seed < 8 ? 2 : 3;
    const auto inst = random_instance(g, seed, 3 + seed % 4);
    const auto c12 = build_quotient_core(inst.t1, inst.t2);
    const auto c21 = build_quotient_core(inst.t2, inst.t1);
    EXPECT_EQ(euler(c12), 1 - g) << "seed " << seed;
    EXPECT_EQ(c12.square_count(), c21.square_count());
    EXPECT_EQ(c12.vertex_count(), c21.vertex_count());
    EXPECT_EQ(c12.edge_count(Color::kBlack), c21.edge_count(Color::kRed));
    // Every black edge lies in some square, and so does every red edge.
    for (int e = 0; e < c12.edge_count(); ++e) EXPECT_FALSE(c12.edge_squares(e).empty());
  }
}

TEST(BuildCore, DeterministicAcrossThreads) {
  for (int seed = 0; seed < 3; ++seed) {
    const auto inst = random_instance(3, seed, 5);
    const auto one = build_quotient_core(inst.t1, inst.t2, BuildOptions{1}).serialize();
    const auto four = build_quotient_core(inst.t1, inst.t2, BuildOptions{4}).serialize();
    EXPECT_EQ(one, four);
    EXPECT_EQ(one, build_quotient_core(inst.t1, inst.t2, BuildOptions{1}).serialize());
  }
}

TEST(Oracle, ZeroDiscrepancies) {
  {
    const auto a = std2a(), c = std2c();
    const auto core = build_core(a, c);
    const auto rep = run_oracle(a, c, core, 4);
    EXPECT_TRUE(rep.discrepancies.empty());
    EXPECT_GT(rep.crossing_pairs, 0u);
    EXPECT_EQ(run_oracle(a, c, core, 0).pairs, 0u);
  }
  for (int seed = 0; seed < 5; ++seed) {
    const auto inst = random_instance(2, seed, 6);
    const auto core = build_core(inst.t1, inst.t2);
    EXPECT_TRUE(run_oracle(inst.t1, inst.t2, core, 3).discrepancies.empty()) << "seed " << seed;
  }
}

TEST(RandomInstance, DeterministicPerSeed) {
  for (int seed = 0; seed < 5; ++seed) {
    const auto a = random_instance(3, seed, 4);
    const auto b = random_instance(3, seed, 4);
    EXPECT_EQ(a.t2.serialize(), b.t2.serialize());
    EXPECT_EQ(a.attempts, b.attempts);
  }
  EXPECT_NE(random_instance(2, 1, 4).t2.serialize(), random_instance(2, 2, 4).t2.serialize());
}
