#pragma once

#include <cstddef>
#include <string>

#include "sqcore/word.hpp"

namespace sqcore {

// The infinite reduced word u v v v ...
// Normal form: v cyclically reduced and primitive, u v reduced, and u as
// short as possible (the last letters of u and v differ).
class RationalEnd {
 public:
  RationalEnd() = default;
  // Throws RankMismatch or ParseError (trivial period).
  static RationalEnd make(const Word& head, const Word& period);
  // Syntax "u(v)" with u possibly empty, e.g. "(a)", "Ba(ab)".
  static RationalEnd parse(int rank, std::string_view text);

  const Word& head() const noexcept { return head_; }
  const Word& period() const noexcept { return period_; }
  int rank() const noexcept { return period_.rank(); }

  Letter letter_at(std::size_t i) const;
  Word prefix(std::size_t n) const;
  std::string str() const;

  friend bool operator==(const RationalEnd&, const RationalEnd&) = default;

 private:
  Word head_;
  Word period_;
};

}  // namespace sqcore
