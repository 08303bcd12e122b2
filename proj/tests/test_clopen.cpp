#include <gtest/gtest.h>

#include "sqcore/clopen.hpp"
#include "sqcore/errors.hpp"
#include "support.hpp"

using namespace sqcore;

namespace {

ClopenSet C(int rank, const char* s) { return ClopenSet::parse(rank, s); }
Word W(int rank, const char* s) { return Word::parse(rank, s); }

ClopenSet raw(int rank, std::initializer_list<const char*> ws) {
  std::vector<Word> v;
  for (auto w : ws) v.push_back(W(rank, w));
  return ClopenSet::canonicalize(rank, v);
}

Bipartition bip(const ClopenSet& plus) { return Bipartition::from_plus(plus); }

}  // namespace

TEST(Canonicalize, Examples) {
  EXPECT_EQ(raw(2, {"a", "ab"}).str(), "{a}");
  EXPECT_EQ(raw(2, {"a", "b", "A", "B"}).str(), "{1}");
  EXPECT_TRUE(raw(2, {"a", "b", "A", "B"}).is_full());
  EXPECT_EQ(raw(2, {"ab", "aB", "aa"}).str(), "{a}");
  EXPECT_EQ(raw(2, {"aa", "ab", "aB", "b", "A", "B"}).str(), "{1}");
  EXPECT_EQ(raw(2, {"Ba", "a"}).str(), "{a,Ba}");
}

TEST(Canonicalize, OrderIndependentAndMatchesOracle) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 500; ++k) {
    const int rank = 2 + sqtest::pick(rng, 2);
    std::vector<Word> ws;
    const int n = 1 + sqtest::pick(rng, 12);
    for (int i = 0; i < n; ++i) ws.push_back(sqtest::random_reduced(rng, rank, 1 + sqtest::pick(rng, 3)));
    const auto x = ClopenSet::canonicalize(rank, ws);
    std::shuffle(ws.begin(), ws.end(), rng);
    EXPECT_EQ(ClopenSet::canonicalize(rank, ws), x);
    const auto y = ClopenSet::canonicalize(rank, std::vector<Word>(ws.begin(), ws.end()));
    EXPECT_EQ(sqtest::expand(x, 4), sqtest::expand(y, 4));
    // Canonical: antichain and no saturated family.
    const auto ps = x.prefixes();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (i != j) EXPECT_FALSE(ps[i].is_prefix_of(ps[j]));
      }
    }
    std::map<std::string, int> siblings;
    for (const auto& p : ps) {
      if (!p.empty()) ++siblings[p.prefix(p.size() - 1).code()];
    }
    for (const auto& [parent, count] : siblings) EXPECT_LT(count, child_count(rank, parent.size()));
    EXPECT_EQ(ClopenSet::parse(rank, x.str()), x);
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(C(2, "{a}")).str(), "{b,A,B}");
  EXPECT_TRUE(complement(ClopenSet::full(2)).is_empty());
  EXPECT_TRUE(complement(ClopenSet(2)).is_full());
  EXPECT_EQ(complement(C(2, "{ab}")).str(), "{b,A,B,aa,aB}");
}

TEST(SetOps, Examples) {
  EXPECT_EQ(intersect(C(2, "{a}"), C(2, "{ab}")).str(), "{ab}");
  EXPECT_TRUE(intersect(C(2, "{a}"), C(2, "{b}")).is_empty());
  EXPECT_EQ(intersect(C(2, "{a,B}"), C(2, "{ab,Ba}")).str(), "{ab,Ba}");
  EXPECT_TRUE(ClopenSet(2).is_empty());
  EXPECT_EQ(C(2, "{a}"), raw(2, {"ab", "aa", "aB"}));
  EXPECT_NE(C(2, "{a}"), C(2, "{b}"));
  EXPECT_EQ(unite(C(2, "{a}"), C(2, "{b,A,B}")).str(), "{1}");
}

TEST(SetOps, BooleanLawsAgainstOracle) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 1000; ++k) {
    const int rank = 2 + sqtest::pick(rng, 2);
    const auto x = sqtest::random_clopen(rng, rank, 1 + sqtest::pick(rng, 5), 3);
    const auto y = sqtest::random_clopen(rng, rank, 1 + sqtest::pick(rng, 5), 3);
    const auto cx = complement(x);
    EXPECT_EQ(complement(cx), x);
    EXPECT_TRUE(intersect(x, cx).is_empty());
    EXPECT_TRUE(unite(x, cx).is_full());
    EXPECT_EQ(complement(intersect(x, y)), unite(cx, complement(y)));
    EXPECT_EQ(complement(unite(x, y)), intersect(cx, complement(y)));
    EXPECT_EQ(unite(x, intersect(x, y)), x);
    EXPECT_EQ(intersect(x, unite(x, y)), x);
    EXPECT_EQ(intersects(x, y), !intersect(x, y).is_empty());
    EXPECT_EQ(is_subset(x, y), intersect(x, y) == x);
    if (rank == 2) {
      const auto ex = sqtest::expand(x, 4);
      const auto ey = sqtest::expand(y, 4);
      std::set<std::vector<Letter>> both;
      std::set_intersection(ex.begin(), ex.end(), ey.begin(), ey.end(), std::inserter(both, both.end()));
      EXPECT_EQ(sqtest::expand(intersect(x, y), 4), both);
      EXPECT_EQ(sqtest::expand(cx, 4).size() + ex.size(), sqtest::all_reduced(2, 4).size());
    }
  }
}

TEST(NonNested, Examples) {
  EXPECT_FALSE(non_nested(bip(C(2, "{a}")), bip(C(2, "{ab}"))));
  EXPECT_FALSE(non_nested(bip(C(2, "{a}")), bip(C(2, "{b}"))));
  EXPECT_TRUE(non_nested(bip(C(2, "{a,b}")), bip(C(2, "{a,B}"))));
}

TEST(NonNested, SymmetricAndIrreflexive) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 500; ++k) {
    const auto x = sqtest::random_clopen(rng, 2, 1 + sqtest::pick(rng, 4), 3);
    const auto y = sqtest::random_clopen(rng, 2, 1 + sqtest::pick(rng, 4), 3);
    if (x.is_full() || y.is_full()) continue;
    EXPECT_FALSE(non_nested(bip(x), bip(x)));
    EXPECT_EQ(non_nested(bip(x), bip(y)), non_nested(bip(y), bip(x)));
    EXPECT_EQ(non_nested(bip(x), bip(y)), non_nested(bip(x).reversed(), bip(y)));
  }
}

TEST(ContainsEnd, Examples) {
  EXPECT_TRUE(contains_end(C(2, "{a}"), RationalEnd::parse(2, "(a)")));
  EXPECT_FALSE(contains_end(C(2, "{a}"), RationalEnd::parse(2, "(b)")));
  EXPECT_TRUE(contains_end(C(2, "{ab}"), RationalEnd::parse(2, "(ab)")));
  EXPECT_TRUE(contains_end(ClopenSet::full(2), RationalEnd::parse(2, "(b)")));
  EXPECT_FALSE(contains_end(ClopenSet(2), RationalEnd::parse(2, "(b)")));
}

TEST(StablePrefix, Examples) {
  const auto id = Automorphism::identity(2);
  EXPECT_EQ(stable_prefix(id, W(2, "ab")).str(), "ab");
  const auto a = Automorphism::make({W(2, "ab"), W(2, "b")});
  EXPECT_EQ(stable_prefix(a, W(2, "a")).str(), "1");
  EXPECT_EQ(stable_prefix(a, W(2, "aaaa")).str(), "ababa");
}

TEST(StablePrefix, ContractHoldsOnSampledEnds) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 300; ++k) {
    const int rank = 2 + sqtest::pick(rng, 2);
    const auto a = sqtest::random_automorphism(rng, rank, 1 + sqtest::pick(rng, 6));
    const Word w = sqtest::random_reduced(rng, rank, 1 + sqtest::pick(rng, 5));
    const Word p = stable_prefix(a, w);
    for (int t = 0; t < 10; ++t) {
      auto e = sqtest::random_end(rng, rank, 4);
      e = RationalEnd::make(multiply(w, e.head()), e.period());
      if (!w.is_prefix_of(e.prefix(w.size() + 1))) continue;
      EXPECT_TRUE(contains_end(ClopenSet::cylinder(p), apply_to_end(a, e)));
    }
  }
}

TEST(BoundaryImage, Examples) {
  EXPECT_EQ(boundary_image(Automorphism::identity(2), C(2, "{ab}")).str(), "{ab}");
  const auto swap = Automorphism::make({W(2, "b"), W(2, "a")});
  EXPECT_EQ(boundary_image(swap, C(2, "{a}")).str(), "{b}");
  EXPECT_TRUE(boundary_image(swap, ClopenSet(2)).is_empty());
  EXPECT_TRUE(boundary_image(swap, ClopenSet::full(2)).is_full());

  const auto a = Automorphism::make({W(2, "ab"), W(2, "b")});
  const auto x = C(2, "{b}");
  const auto img = boundary_image(a, x);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const auto e = sqtest::random_end(rng, 2, 5);
    EXPECT_EQ(contains_end(img, apply_to_end(a, e)), contains_end(x, e)) << e.str();
  }
}

TEST(BoundaryImage, RoundTripHomomorphismAndOracle) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    const int rank = 2 + sqtest::pick(rng, 2);
    const auto a = sqtest::random_automorphism(rng, rank, 1 + sqtest::pick(rng, 6));
    const auto x = sqtest::random_clopen(rng, rank, 1 + sqtest::pick(rng, 4), 3);
    const auto y = sqtest::random_clopen(rng, rank, 1 + sqtest::pick(rng, 4), 3);
    const auto ix = boundary_image(a, x);
    EXPECT_EQ(boundary_image(a.inverse(), ix), x);
    EXPECT_EQ(boundary_image(a, intersect(x, y)), intersect(ix, boundary_image(a, y)));
    EXPECT_EQ(boundary_image(a, complement(x)), complement(ix));
    for (int t = 0; t < 20; ++t) {
      const auto e = sqtest::random_end(rng, rank, 5);
      EXPECT_EQ(contains_end(ix, apply_to_end(a, e)), contains_end(x, e));
    }
  }
}

TEST(Translate, MatchesInnerBoundaryImageAndEnds) {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 300; ++k) {
    const int rank = 2 + sqtest::pick(rng, 2);
    const Word g = sqtest::random_reduced(rng, rank, sqtest::pick(rng, 4));
    const auto x = sqtest::random_clopen(rng, rank, 1 + sqtest::pick(rng, 4), 3);
    const auto tx = translate(g, x);
    // Left multiplication and conjugation by g agree on the boundary.
    EXPECT_EQ(tx, boundary_image(conjugation(g), x));
    EXPECT_EQ(translate(g.inverse(), tx), x);
    for (int t = 0; t < 10; ++t) {
      const auto e = sqtest::random_end(rng, rank, 5);
      const auto ge = RationalEnd::make(multiply(g, e.head()), e.period());
      EXPECT_EQ(contains_end(tx, ge), contains_end(x, e));
    }
  }
}
