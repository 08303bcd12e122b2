#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqcore {

// Signed generator: +i is the i-th generator, -i its inverse (1 <= i <= rank).
using Letter = int;

// Letters are stored one per byte: generator i as i, its inverse as i | 32.
// With this code, byte order is a < b < ... < A < B < ..., and inversion
// is a single xor.
namespace code {
inline constexpr unsigned char kInverseBit = 32;
inline char encode(Letter l) { return static_cast<char>(l > 0 ? l : (-l) | kInverseBit); }
inline Letter decode(char c) {
  const int u = static_cast<unsigned char>(c);
  return (u & kInverseBit) ? -(u & 31) : u;
}
inline char invert(char c) { return static_cast<char>(c ^ kInverseBit); }
inline int generator(char c) { return static_cast<unsigned char>(c) & 31; }
char to_text(char c);
}  // namespace code

class Word {
 public:
  Word() = default;
  explicit Word(int rank);

  // Freely reduces the sequence. Throws LetterOutOfRange.
  static Word reduce(int rank, std::span<const Letter> letters);
  static Word letter(int rank, Letter l);
  // Parses "1" or a string over a..z / A..Z. Throws LetterOutOfRange or Parse.
  static Word parse(int rank, std::string_view text);
  // Builds a word from an already reduced code string (unchecked).
  static Word from_code(int rank, std::string code);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return code_.size(); }
  bool empty() const noexcept { return code_.empty(); }
  Letter operator[](std::size_t i) const { return code::decode(code_[i]); }
  Letter front() const { return code::decode(code_.front()); }
  Letter back() const { return code::decode(code_.back()); }
  std::vector<Letter> letters() const;
  const std::string& code() const noexcept { return code_; }

  Word inverse() const;
  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t n) const;
  bool is_prefix_of(const Word& other) const;

  // Appends one letter, cancelling against the last letter if needed.
  void push_reduced(Letter l);
  void pop_back() { code_.pop_back(); }

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.code_ == b.code_;
  }
  // Shortlex with a < b < ... < A < B < ...
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  int rank_ = 0;
  std::string code_;
};

Word multiply(const Word& a, const Word& b);
Word multiply(const Word& a, const Word& b, const Word& c);
Word inverse(const Word& w);
// Substitutes images[i-1] for generator i and reduces.
Word apply_hom(std::span<const Word> images, const Word& w);
bool shortlex_less(const std::string& a, const std::string& b);

// Number of reduced one-letter extensions of a word of length n.
inline int child_count(int rank, std::size_t n) { return n == 0 ? 2 * rank : 2 * rank - 1; }

std::string letter_text(Letter l);

}  // namespace sqcore

template <>
struct std::hash<sqcore::Word> {
  std::size_t operator()(const sqcore::Word& w) const noexcept {
    return std::hash<std::string>{}(w.code()) ^ static_cast<std::size_t>(w.rank());
  }
};
