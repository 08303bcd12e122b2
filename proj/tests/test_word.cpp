#include <gtest/gtest.h>

#include "sqcore/automorphism.hpp"
#include "sqcore/errors.hpp"
#include "sqcore/rational_end.hpp"
#include "support.hpp"

using namespace sqcore;
using sqtest::naive_reduce;

namespace {

Word W(int rank, const char* s) { return Word::parse(rank, s); }

Automorphism aut2(const char* a, const char* b) { return Automorphism::make({W(2, a), W(2, b)}); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternalBoundExceeded;
}

}  // namespace

TEST(Reduce, Examples) {
  EXPECT_EQ(Word::reduce(2, std::vector<Letter>{1, -1, 2}).str(), "b");
  EXPECT_EQ(Word::reduce(2, std::vector<Letter>{}).str(), "1");
  const std::vector<Letter> w{1, 2, -2, -1, 2};
  EXPECT_EQ(Word::reduce(2, w).letters(), naive_reduce(w));
  EXPECT_EQ(Word::reduce(2, w).str(), "b");
}

TEST(Reduce, RejectsLettersOutOfRange) {
  EXPECT_EQ(kind_of([] { Word::reduce(2, std::vector<Letter>{3}); }), ErrorKind::kLetterOutOfRange);
  EXPECT_EQ(kind_of([] { Word::parse(2, "ac"); }), ErrorKind::kLetterOutOfRange);
  EXPECT_EQ(kind_of([] { Word::reduce(2, std::vector<Letter>{0}); }), ErrorKind::kLetterOutOfRange);
}

TEST(Reduce, RandomAgainstOracle) {
  std::mt19937_64 rng(7);
  for (int rank : {2, 3, 4}) {
    for (int k = 0; k < 1000; ++k) {
      const auto raw = sqtest::random_letters(rng, rank, sqtest::pick(rng, 30));
      const Word w = Word::reduce(rank, raw);
      EXPECT_EQ(w.letters(), naive_reduce(raw));
      EXPECT_LE(w.size(), raw.size());
      EXPECT_EQ(w.size() % 2, raw.size() % 2);
      EXPECT_EQ(Word::reduce(rank, w.letters()), w);
      EXPECT_TRUE(multiply(w, w.inverse()).empty());
      EXPECT_EQ(Word::parse(rank, w.str()), w);
    }
  }
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(W(2, "ab"), W(2, "B")).str(), "a");
  EXPECT_EQ(multiply(W(2, "a"), W(2, "1")).str(), "a");
  EXPECT_EQ(multiply(W(2, "ab"), W(2, "BA")).str(), "1");
  EXPECT_EQ(kind_of([] { multiply(W(2, "a"), W(3, "a")); }), ErrorKind::kRankMismatch);
}

TEST(Multiply, AssociativeAndMatchesConcatenation) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const Word a = Word::reduce(3, sqtest::random_letters(rng, 3, 8));
    const Word b = Word::reduce(3, sqtest::random_letters(rng, 3, 8));
    const Word c = Word::reduce(3, sqtest::random_letters(rng, 3, 8));
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    auto cat = a.letters();
    const auto bl = b.letters();
    cat.insert(cat.end(), bl.begin(), bl.end());
    EXPECT_EQ(multiply(a, b).letters(), naive_reduce(cat));
  }
}

TEST(Word, ShortlexOrder) {
  EXPECT_LT(W(2, "1"), W(2, "a"));
  EXPECT_LT(W(2, "a"), W(2, "b"));
  EXPECT_LT(W(2, "b"), W(2, "A"));
  EXPECT_LT(W(2, "A"), W(2, "B"));
  EXPECT_LT(W(2, "B"), W(2, "aa"));
}

TEST(ApplyHom, Examples) {
  const std::vector<Word> alpha{W(2, "ab"), W(2, "b")};
  EXPECT_EQ(apply_hom(alpha, W(2, "aB")).str(), "a");
  const std::vector<Word> id{W(2, "a"), W(2, "b")};
  EXPECT_EQ(apply_hom(id, W(2, "ab")).str(), "ab");
  const std::vector<Word> swap{W(2, "b"), W(2, "a")};
  EXPECT_EQ(apply_hom(swap, W(2, "aB")).str(), "bA");
}

TEST(ApplyHom, IsHomomorphism) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    std::vector<Word> imgs;
    for (int i = 0; i < 3; ++i) imgs.push_back(Word::reduce(3, sqtest::random_letters(rng, 3, 5)));
    const Word u = Word::reduce(3, sqtest::random_letters(rng, 3, 7));
    const Word v = Word::reduce(3, sqtest::random_letters(rng, 3, 7));
    EXPECT_EQ(apply_hom(imgs, multiply(u, v)), multiply(apply_hom(imgs, u), apply_hom(imgs, v)));
  }
}

TEST(Automorphism, MakeExamples) {
  const auto a = aut2("ab", "b");
  EXPECT_EQ(a.inverse_images()[0].str(), "aB");
  EXPECT_EQ(a.inverse_images()[1].str(), "b");
  EXPECT_EQ(a.cancellation_bound(), 3);
  for (int i = 1; i <= 2; ++i) {
    const Word x = Word::letter(2, i);
    EXPECT_EQ(a.apply(a.apply_inverse(x)), x);
    EXPECT_EQ(a.apply_inverse(a.apply(x)), x);
  }
  const auto id = aut2("a", "b");
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.inverse_images(), id.images());
  EXPECT_EQ(id.cancellation_bound(), 0);
  EXPECT_EQ(kind_of([] { aut2("a", "a"); }), ErrorKind::kNotABasis);
}

TEST(Automorphism, RejectsNonBases) {
  EXPECT_EQ(kind_of([] { aut2("aa", "b"); }), ErrorKind::kNotABasis);
  EXPECT_EQ(kind_of([] { aut2("ab", "ba"); }), ErrorKind::kNotABasis);
  EXPECT_EQ(kind_of([] { aut2("1", "b"); }), ErrorKind::kNotABasis);
  EXPECT_EQ(kind_of([] { aut2("abAB", "b"); }), ErrorKind::kNotABasis);
  EXPECT_EQ(kind_of([] { Automorphism::make({W(3, "ab"), W(3, "ba"), W(3, "c")}); }),
            ErrorKind::kNotABasis);
  EXPECT_EQ(kind_of([] { Automorphism::make({W(2, "a"), W(2, "b"), W(2, "a")}); }),
            ErrorKind::kRankMismatch);
}

TEST(Automorphism, ComposeExamples) {
  const auto a = aut2("ab", "b");
  const auto id = Automorphism::identity(2);
  EXPECT_EQ(compose(id, a), a);
  EXPECT_TRUE(compose(a, a.inverse()).is_identity());
  const auto aa = compose(a, a);
  EXPECT_EQ(aa.images()[0].str(), "abb");
  EXPECT_EQ(aa.images()[1].str(), "b");
  EXPECT_EQ(aa.cancellation_bound(), 4);
}

TEST(Automorphism, RandomNielsenProductsAreCertified) {
  std::mt19937_64 rng(5);
  for (int rank : {2, 3, 4, 5}) {
    for (int k = 0; k < 150; ++k) {
      // Build the image tuple by raw moves on the standard basis, then
      // conjugate and shuffle it, so certification sees an arbitrary basis.
      std::vector<Word> t;
      for (int i = 1; i <= rank; ++i) t.push_back(Word::letter(rank, i));
      const int moves = sqtest::pick(rng, 9);
      for (int m = 0; m < moves; ++m) {
        const int i = sqtest::pick(rng, rank);
        int j = sqtest::pick(rng, rank - 1);
        if (j >= i) ++j;
        const Word tj = sqtest::pick(rng, 2) ? t[j] : t[j].inverse();
        t[i] = sqtest::pick(rng, 2) ? multiply(t[i], tj) : multiply(tj, t[i]);
        if (sqtest::pick(rng, 4) == 0) t[i] = t[i].inverse();
      }
      const Word c = sqtest::random_reduced(rng, rank, sqtest::pick(rng, 3));
      for (auto& w : t) w = multiply(c, w, c.inverse());
      std::shuffle(t.begin(), t.end(), rng);
      const auto a = Automorphism::make(t);
      const auto inv = a.inverse();
      EXPECT_TRUE(compose(a, inv).is_identity());
      EXPECT_TRUE(compose(inv, a).is_identity());
    }
  }
}

TEST(RationalEnd, NormalForm) {
  const auto e = RationalEnd::make(W(2, "a"), W(2, "a"));
  EXPECT_EQ(e.str(), "(a)");
  EXPECT_EQ(RationalEnd::make(W(2, "ab"), W(2, "Bab")).str(), "(a)");
  EXPECT_EQ(RationalEnd::make(W(2, "1"), W(2, "abab")).str(), "(ab)");
  EXPECT_EQ(RationalEnd::make(W(2, "bA"), W(2, "ab")).str(), "b(ba)");
  EXPECT_EQ(RationalEnd::parse(2, "bA(ab)"), RationalEnd::make(W(2, "b"), W(2, "ba")));
}

TEST(RationalEnd, NormalFormAgreesWithUnrolling) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 2000; ++k) {
    const int rank = 2 + sqtest::pick(rng, 2);
    const Word u = Word::reduce(rank, sqtest::random_letters(rng, rank, sqtest::pick(rng, 7)));
    Word v(rank);
    while (v.empty()) v = Word::reduce(rank, sqtest::random_letters(rng, rank, 1 + sqtest::pick(rng, 6)));
    const auto e = RationalEnd::make(u, v);
    const std::size_t n = 40;
    EXPECT_EQ(e.prefix(n).letters(), sqtest::end_prefix_oracle(u, v, n));
    const auto& h = e.head();
    const auto& p = e.period();
    EXPECT_FALSE(p.empty());
    EXPECT_NE(p.front(), -p.back());
    if (!h.empty()) {
      EXPECT_NE(h.back(), -p.front());
      EXPECT_NE(h.back(), p.back());
    }
  }
}

TEST(ApplyToEnd, Examples) {
  const auto a_inf = RationalEnd::make(W(2, "1"), W(2, "a"));
  EXPECT_EQ(apply_to_end(Automorphism::identity(2), a_inf), a_inf);
  EXPECT_EQ(apply_to_end(aut2("b", "a"), a_inf).str(), "(b)");
  const auto img = apply_to_end(aut2("ab", "b"), a_inf);
  EXPECT_EQ(img.str(), "(ab)");
  const Word aab = W(2, "ab");
  Word power(2);
  for (int n = 1; n <= 4; ++n) {
    power = multiply(power, aab);
    EXPECT_EQ(img.prefix(power.size()), power);
  }
}

TEST(ApplyToEnd, RoundTripAndOracle) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    const int rank = 2 + sqtest::pick(rng, 2);
    const auto a = sqtest::random_automorphism(rng, rank, 1 + sqtest::pick(rng, 8));
    const auto e = sqtest::random_end(rng, rank, 6);
    const auto img = apply_to_end(a, e);
    EXPECT_EQ(apply_to_end(a.inverse(), img), e);
    const std::size_t n = 30;
    EXPECT_EQ(img.prefix(n).letters(), sqtest::end_prefix_oracle(a.apply(e.head()), a.apply(e.period()), n));
  }
}
