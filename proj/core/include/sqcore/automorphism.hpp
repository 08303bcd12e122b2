#pragma once

#include <span>
#include <string>
#include <vector>

#include "sqcore/word.hpp"

namespace sqcore {

class RationalEnd;

// A Nielsen transvection or a permutation/inversion of the generators,
// together with its inverse and its exact bounded-cancellation constant.
struct ElementaryMap {
  std::vector<Word> images;
  std::vector<Word> inverse_images;
  int cancellation = 0;

  bool is_letter_map() const { return cancellation == 0; }
};

class Automorphism {
 public:
  Automorphism() = default;

  // Certifies that the images form a basis. Throws NotABasis.
  static Automorphism make(std::vector<Word> images);
  static Automorphism identity(int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const std::vector<Word>& inverse_images() const noexcept { return inverse_images_; }
  // Sum of image lengths, or 0 when every image is a single letter.
  int cancellation_bound() const noexcept { return bound_; }
  bool is_identity() const;

  Word apply(const Word& w) const;
  Word apply_inverse(const Word& w) const;
  Automorphism inverse() const;

  // Elementary factors in the order they act on the boundary.
  const std::vector<ElementaryMap>& factors() const noexcept { return factors_; }
  const std::vector<ElementaryMap>& inverse_factors() const noexcept { return inverse_factors_; }

  std::string str() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.images_ == b.images_;
  }

 private:
  int rank_ = 0;
  int bound_ = 0;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
  std::vector<ElementaryMap> factors_;
  std::vector<ElementaryMap> inverse_factors_;
};

// outer ∘ inner.
Automorphism compose(const Automorphism& outer, const Automorphism& inner);

// Elementary automorphisms: x_i -> x_i x_j^e (right) or x_j^e x_i (left).
Automorphism transvection(int rank, int i, int j, int e, bool right);
// x_i -> letters[i-1].
Automorphism letter_permutation(int rank, std::span<const Letter> letters);
// x -> w x w^-1.
Automorphism conjugation(const Word& w);

RationalEnd apply_to_end(const Automorphism& a, const RationalEnd& end);

}  // namespace sqcore
