#include "sqcore/automorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "sqcore/errors.hpp"
#include "sqcore/rational_end.hpp"

namespace sqcore {

namespace {

// Ordering used to steer Nielsen reduction: length first, then the first
// half of the word and of its inverse. Sorting the keys of a tuple in
// decreasing order gives a potential that strictly drops with every
// accepted move.
using Key = std::tuple<std::size_t, std::string, std::string>;

Key word_key(const std::string& w) {
  const std::size_t h = (w.size() + 1) / 2;
  std::string a = w.substr(0, h);
  std::string b;
  b.reserve(h);
  for (std::size_t i = 0; i < h; ++i) b.push_back(code::invert(w[w.size() - 1 - i]));
  if (b < a) std::swap(a, b);
  return {w.size(), std::move(a), std::move(b)};
}

std::vector<Key> potential(const std::vector<Key>& keys) {
  std::vector<Key> p = keys;
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

struct Move {
  int i;
  int j;
  int e;
  bool right;
};

ElementaryMap transvection_map(int rank, const Move& m) {
  ElementaryMap f;
  f.cancellation = 1;
  for (int k = 1; k <= rank; ++k) {
    f.images.push_back(Word::letter(rank, k));
    f.inverse_images.push_back(Word::letter(rank, k));
  }
  const Word xi = Word::letter(rank, m.i);
  const Word fwd = Word::letter(rank, m.e * m.j);
  const Word back = fwd.inverse();
  f.images[m.i - 1] = m.right ? multiply(xi, fwd) : multiply(fwd, xi);
  f.inverse_images[m.i - 1] = m.right ? multiply(xi, back) : multiply(back, xi);
  return f;
}

ElementaryMap inverted(const ElementaryMap& f) {
  return ElementaryMap{f.inverse_images, f.images, f.cancellation};
}

ElementaryMap letter_map(int rank, const std::vector<Letter>& letters) {
  ElementaryMap f;
  f.cancellation = 0;
  f.images.resize(rank, Word(rank));
  f.inverse_images.resize(rank, Word(rank));
  for (int i = 1; i <= rank; ++i) {
    const Letter l = letters[i - 1];
    f.images[i - 1] = Word::letter(rank, l);
    f.inverse_images[std::abs(l) - 1] = Word::letter(rank, l > 0 ? i : -i);
  }
  return f;
}

int crude_bound(const std::vector<Word>& images) {
  bool letters_only = true;
  int total = 0;
  for (const auto& w : images) {
    total += static_cast<int>(w.size());
    letters_only = letters_only && w.size() == 1;
  }
  return letters_only ? 0 : total;
}

Word apply_factors(const std::vector<ElementaryMap>& factors, Word w) {
  for (const auto& f : factors) w = apply_hom(f.images, w);
  return w;
}

}  // namespace

Automorphism Automorphism::make(std::vector<Word> images) {
  const int rank = static_cast<int>(images.size());
  if (rank == 0) throw Error(ErrorKind::kNotABasis, "empty image tuple");
  for (const auto& w : images) {
    if (w.rank() != rank) {
      throw Error(ErrorKind::kRankMismatch, "image " + w.str() + " has rank " +
                                                std::to_string(w.rank()) + ", expected " +
                                                std::to_string(rank));
    }
  }

  std::vector<std::string> t;
  std::vector<Key> keys;
  for (const auto& w : images) {
    t.push_back(w.code());
    keys.push_back(word_key(w.code()));
  }
  std::vector<Move> moves;
  std::vector<Key> current = potential(keys);
  const std::size_t max_steps = 1000000;
  while (true) {
    if (moves.size() > max_steps) {
      throw Error(ErrorKind::kInternalBoundExceeded, "Nielsen reduction did not terminate");
    }
    bool found = false;
    Move best{};
    std::string best_word;
    std::vector<Key> best_pot = current;
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) {
        if (i == j) continue;
        for (int e : {1, -1}) {
          const Word tj = e > 0 ? Word::from_code(rank, t[j]) : Word::from_code(rank, t[j]).inverse();
          const Word ti = Word::from_code(rank, t[i]);
          for (bool right : {true, false}) {
            const Word cand = right ? multiply(ti, tj) : multiply(tj, ti);
            if (cand.empty()) {
              throw Error(ErrorKind::kNotABasis, "images " + std::to_string(i + 1) + " and " +
                                                     std::to_string(j + 1) + " are dependent");
            }
            if (cand.size() > t[i].size()) continue;
            std::vector<Key> k2 = keys;
            k2[i] = word_key(cand.code());
            std::vector<Key> p = potential(k2);
            if (p < best_pot) {
              best_pot = std::move(p);
              best = Move{i + 1, j + 1, e, right};
              best_word = cand.code();
              found = true;
            }
          }
        }
      }
    }
    if (!found) break;
    t[best.i - 1] = best_word;
    keys[best.i - 1] = word_key(best_word);
    current = std::move(best_pot);
    moves.push_back(best);
  }

  std::vector<Letter> perm(rank);
  std::vector<bool> seen(rank + 1, false);
  for (int i = 0; i < rank; ++i) {
    if (t[i].size() != 1 || seen[code::generator(t[i][0])]) {
      throw Error(ErrorKind::kNotABasis, "Nielsen reduction stalls at " +
                                             Word::from_code(rank, t[i]).str() + " (image " +
                                             std::to_string(i + 1) + ")");
    }
    seen[code::generator(t[i][0])] = true;
    perm[i] = code::decode(t[i][0]);
  }

  // images ∘ τ1 ∘ ... ∘ τk = π, so the map is π ∘ τk^-1 ∘ ... ∘ τ1^-1.
  Automorphism a;
  a.rank_ = rank;
  a.images_ = std::move(images);
  for (const auto& m : moves) a.factors_.push_back(inverted(transvection_map(rank, m)));
  bool trivial_perm = true;
  for (int i = 0; i < rank; ++i) trivial_perm = trivial_perm && perm[i] == i + 1;
  if (!trivial_perm) a.factors_.push_back(letter_map(rank, perm));
  a.inverse_factors_.reserve(a.factors_.size());
  for (auto it = a.factors_.rbegin(); it != a.factors_.rend(); ++it) {
    a.inverse_factors_.push_back(inverted(*it));
  }
  for (int i = 1; i <= rank; ++i) {
    a.inverse_images_.push_back(apply_factors(a.inverse_factors_, Word::letter(rank, i)));
  }
  a.bound_ = crude_bound(a.images_);

  for (int i = 1; i <= rank; ++i) {
    const Word x = Word::letter(rank, i);
    if (apply_factors(a.factors_, x) != a.images_[i - 1] ||
        apply_hom(a.images_, a.inverse_images_[i - 1]) != x) {
      throw std::logic_error("Nielsen factorisation failed to reproduce the automorphism");
    }
  }
  return a;
}

Automorphism Automorphism::identity(int rank) {
  std::vector<Word> imgs;
  for (int i = 1; i <= rank; ++i) imgs.push_back(Word::letter(rank, i));
  return make(std::move(imgs));
}

bool Automorphism::is_identity() const {
  for (int i = 0; i < rank_; ++i) {
    if (images_[i].size() != 1 || images_[i][0] != i + 1) return false;
  }
  return true;
}

Word Automorphism::apply(const Word& w) const { return apply_hom(images_, w); }

Word Automorphism::apply_inverse(const Word& w) const { return apply_hom(inverse_images_, w); }

Automorphism Automorphism::inverse() const {
  Automorphism a;
  a.rank_ = rank_;
  a.images_ = inverse_images_;
  a.inverse_images_ = images_;
  a.factors_ = inverse_factors_;
  a.inverse_factors_ = factors_;
  a.bound_ = crude_bound(a.images_);
  return a;
}

std::string Automorphism::str() const {
  std::string s;
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ", ";
    s += letter_text(i + 1) + "->" + images_[i].str();
  }
  return s;
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  if (outer.rank() != inner.rank()) {
    throw Error(ErrorKind::kRankMismatch, "composing automorphisms of rank " +
                                              std::to_string(outer.rank()) + " and " +
                                              std::to_string(inner.rank()));
  }
  std::vector<Word> imgs;
  for (const auto& w : inner.images()) imgs.push_back(outer.apply(w));
  return Automorphism::make(std::move(imgs));
}

Automorphism transvection(int rank, int i, int j, int e, bool right) {
  if (i == j || i < 1 || j < 1 || i > rank || j > rank) {
    throw Error(ErrorKind::kLetterOutOfRange, "bad transvection indices");
  }
  return Automorphism::make(transvection_map(rank, Move{i, j, e, right}).images);
}

Automorphism letter_permutation(int rank, std::span<const Letter> letters) {
  std::vector<Word> imgs;
  for (Letter l : letters) imgs.push_back(Word::letter(rank, l));
  if (static_cast<int>(imgs.size()) != rank) throw Error(ErrorKind::kRankMismatch, "permutation size");
  return Automorphism::make(std::move(imgs));
}

Automorphism conjugation(const Word& w) {
  std::vector<Word> imgs;
  for (int i = 1; i <= w.rank(); ++i) {
    imgs.push_back(multiply(w, Word::letter(w.rank(), i), w.inverse()));
  }
  return Automorphism::make(std::move(imgs));
}

RationalEnd apply_to_end(const Automorphism& a, const RationalEnd& end) {
  if (a.rank() != end.rank()) throw Error(ErrorKind::kRankMismatch, "end rank");
  return RationalEnd::make(a.apply(end.head()), a.apply(end.period()));
}

}  // namespace sqcore
