#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sqcore/automorphism.hpp"
#include "sqcore/clopen.hpp"
#include "sqcore/rational_end.hpp"
#include "sqcore/word.hpp"

namespace sqtest {

using sqcore::Letter;
using sqcore::Word;

inline int pick(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

inline Letter random_letter(std::mt19937_64& rng, int rank) {
  const int i = pick(rng, 2 * rank);
  return i < rank ? i + 1 : -(i - rank + 1);
}

// Unreduced letter sequence.
inline std::vector<Letter> random_letters(std::mt19937_64& rng, int rank, int len) {
  std::vector<Letter> out;
  for (int i = 0; i < len; ++i) out.push_back(random_letter(rng, rank));
  return out;
}

// Reduced word of exactly the given length.
inline Word random_reduced(std::mt19937_64& rng, int rank, int len) {
  std::vector<Letter> out;
  while (static_cast<int>(out.size()) < len) {
    const Letter l = random_letter(rng, rank);
    if (!out.empty() && out.back() == -l) continue;
    out.push_back(l);
  }
  return Word::reduce(rank, out);
}

inline sqcore::Automorphism random_automorphism(std::mt19937_64& rng, int rank, int moves) {
  auto a = sqcore::Automorphism::identity(rank);
  for (int k = 0; k < moves; ++k) {
    const int i = pick(rng, rank) + 1;
    int j = pick(rng, rank - 1) + 1;
    if (j >= i) ++j;
    a = sqcore::compose(a, sqcore::transvection(rank, i, j, pick(rng, 2) ? 1 : -1, pick(rng, 2)));
  }
  return a;
}

inline sqcore::ClopenSet random_clopen(std::mt19937_64& rng, int rank, int count, int max_len) {
  std::vector<Word> ws;
  for (int k = 0; k < count; ++k) ws.push_back(random_reduced(rng, rank, 1 + pick(rng, max_len)));
  return sqcore::ClopenSet::canonicalize(rank, ws);
}

inline sqcore::RationalEnd random_end(std::mt19937_64& rng, int rank, int max_len) {
  Word v(rank);
  while (v.empty()) v = Word::reduce(rank, random_letters(rng, rank, 1 + pick(rng, max_len)));
  return sqcore::RationalEnd::make(Word::reduce(rank, random_letters(rng, rank, pick(rng, max_len + 1))), v);
}

// Stack-free oracle: repeatedly delete the first cancelling pair.
inline std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// All reduced words of length n.
inline std::vector<std::vector<Letter>> all_reduced(int rank, int n) {
  std::vector<std::vector<Letter>> out{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : out) {
      for (int l = -rank; l <= rank; ++l) {
        if (l == 0 || (!w.empty() && w.back() == -l)) continue;
        auto x = w;
        x.push_back(l);
        next.push_back(x);
      }
    }
    out = std::move(next);
  }
  return out;
}

// The set of length-n reduced words whose cylinder lies in X, with prefix
// membership decided letter by letter.
inline std::set<std::vector<Letter>> expand(const sqcore::ClopenSet& x, int n) {
  std::set<std::vector<Letter>> out;
  const auto ps = x.prefixes();
  for (const auto& w : all_reduced(x.rank(), n)) {
    for (const auto& p : ps) {
      const auto pl = p.letters();
      if (pl.size() <= w.size() && std::equal(pl.begin(), pl.end(), w.begin())) {
        out.insert(w);
        break;
      }
    }
  }
  return out;
}

// First n letters of reduce(u v^k) for k large enough that cancellation
// cannot reach them.
inline std::vector<Letter> end_prefix_oracle(const Word& u, const Word& v, std::size_t n) {
  std::vector<Letter> w = u.letters();
  const auto vl = v.letters();
  const std::size_t reps = n + 2 * u.size() + 4;
  for (std::size_t k = 0; k < reps; ++k) w.insert(w.end(), vl.begin(), vl.end());
  w = naive_reduce(w);
  w.resize(std::min(n, w.size()));
  return w;
}

}  // namespace sqtest
