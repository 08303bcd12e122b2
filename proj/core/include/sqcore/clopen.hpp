#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sqcore/automorphism.hpp"
#include "sqcore/rational_end.hpp"
#include "sqcore/word.hpp"

namespace sqcore {

// A clopen subset of the boundary of F_g, stored as the canonical antichain
// of cylinder prefixes: no prefix extends another, and no word appears
// through all of its reduced one-letter extensions.
class ClopenSet {
 public:
  ClopenSet() = default;
  explicit ClopenSet(int rank) : rank_(rank) {}

  static ClopenSet full(int rank);
  static ClopenSet cylinder(const Word& prefix);
  static ClopenSet canonicalize(int rank, const std::vector<Word>& prefixes);
  static ClopenSet from_codes(int rank, std::vector<std::string> codes);
  // "{a,Ba}", "{}" for the empty set, "{1}" for the full boundary.
  static ClopenSet parse(int rank, std::string_view text);

  int rank() const noexcept { return rank_; }
  bool is_empty() const noexcept { return codes_.empty(); }
  bool is_full() const noexcept { return codes_.size() == 1 && codes_[0].empty(); }
  std::size_t size() const noexcept { return codes_.size(); }
  std::size_t max_length() const;

  // Prefix codes in plain byte order (extensions of a word are contiguous).
  const std::vector<std::string>& codes() const noexcept { return codes_; }
  // Prefixes in shortlex order.
  std::vector<Word> prefixes() const;

  // C(p) is contained in the set.
  bool covers(std::string_view p) const;
  // C(p) meets the set.
  bool meets(std::string_view p) const;

  std::string str() const;

  friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

 private:
  int rank_ = 0;
  std::vector<std::string> codes_;
};

struct Bipartition {
  ClopenSet plus;
  ClopenSet minus;

  static Bipartition from_plus(ClopenSet plus);
  Bipartition reversed() const { return Bipartition{minus, plus}; }
  bool same_partition(const Bipartition& other) const {
    return plus == other.plus || plus == other.minus;
  }
};

ClopenSet complement(const ClopenSet& x);
ClopenSet intersect(const ClopenSet& x, const ClopenSet& y);
ClopenSet unite(const ClopenSet& x, const ClopenSet& y);
bool intersects(const ClopenSet& x, const ClopenSet& y);
bool is_subset(const ClopenSet& x, const ClopenSet& y);
bool non_nested(const Bipartition& p, const Bipartition& q);
bool contains_end(const ClopenSet& x, const RationalEnd& end);

// Prefix of reduce(a(w)) of length |a(w)| - K; every end starting with w
// is sent by the boundary map of a into its cylinder.
Word stable_prefix(const Automorphism& a, const Word& w);
Word stable_prefix(const ElementaryMap& f, const Word& w);

// Exact image of x under the boundary homeomorphism of a.
ClopenSet boundary_image(const Automorphism& a, const ClopenSet& x);
ClopenSet boundary_image(const ElementaryMap& f, const ClopenSet& x);
// Image under left multiplication by g.
ClopenSet translate(const Word& g, const ClopenSet& x);

}  // namespace sqcore
