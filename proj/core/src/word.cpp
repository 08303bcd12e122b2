#include "sqcore/word.hpp"

#include "sqcore/errors.hpp"

namespace sqcore {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kLetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::kRankMismatch: return "RankMismatch";
    case ErrorKind::kNotABasis: return "NotABasis";
    case ErrorKind::kNotTrivalent: return "NotTrivalent";
    case ErrorKind::kWrongCellCounts: return "WrongCellCounts";
    case ErrorKind::kNotSpanning: return "NotSpanning";
    case ErrorKind::kInvalidCell: return "InvalidCell";
    case ErrorKind::kHypothesisViolated: return "HypothesisViolated";
    case ErrorKind::kInternalBoundExceeded: return "InternalBoundExceeded";
    case ErrorKind::kDegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::kInvalidLink: return "InvalidLink";
    case ErrorKind::kHyperplaneNotTree: return "HyperplaneNotTree";
    case ErrorKind::kComplementNotThreeHoled: return "ComplementNotThreeHoled";
    case ErrorKind::kIncidence: return "IncidenceViolation";
    case ErrorKind::kNotStandardForm: return "NotStandardForm";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Unknown";
}

namespace code {
char to_text(char c) {
  const int g = generator(c);
  return static_cast<char>(((static_cast<unsigned char>(c) & kInverseBit) ? 'A' : 'a') + g - 1);
}
}  // namespace code

namespace {

void check_rank(int rank) {
  if (rank < 0 || rank > 26) throw Error(ErrorKind::kLetterOutOfRange, "rank must be in 0..26");
}

void check_letter(int rank, Letter l) {
  if (l == 0 || l > rank || -l > rank) {
    throw Error(ErrorKind::kLetterOutOfRange,
                "letter " + std::to_string(l) + " outside rank " + std::to_string(rank));
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::reduce(int rank, std::span<const Letter> letters) {
  Word w(rank);
  w.code_.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(rank, l);
    w.push_reduced(l);
  }
  return w;
}

Word Word::letter(int rank, Letter l) {
  Word w(rank);
  check_letter(rank, l);
  w.code_.push_back(code::encode(l));
  return w;
}

Word Word::parse(int rank, std::string_view text) {
  Word w(rank);
  if (text == "1") return w;
  if (text.empty()) throw Error(ErrorKind::kParse, "empty word (use 1 for the identity)");
  for (char c : text) {
    Letter l = 0;
    if (c >= 'a' && c <= 'z') {
      l = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      l = -(c - 'A' + 1);
    } else {
      throw Error(ErrorKind::kParse, std::string("bad character '") + c + "' in word");
    }
    check_letter(rank, l);
    w.push_reduced(l);
  }
  return w;
}

Word Word::from_code(int rank, std::string code) {
  Word w(rank);
  w.code_ = std::move(code);
  return w;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(code_.size());
  for (char c : code_) out.push_back(code::decode(c));
  return out;
}

Word Word::inverse() const {
  Word w(rank_);
  w.code_.assign(code_.rbegin(), code_.rend());
  for (char& c : w.code_) c = code::invert(c);
  return w;
}

Word Word::prefix(std::size_t n) const {
  Word w(rank_);
  w.code_ = code_.substr(0, n);
  return w;
}

Word Word::suffix_from(std::size_t n) const {
  Word w(rank_);
  if (n < code_.size()) w.code_ = code_.substr(n);
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  return code_.size() <= other.code_.size() && other.code_.compare(0, code_.size(), code_) == 0;
}

void Word::push_reduced(Letter l) {
  const char c = code::encode(l);
  if (!code_.empty() && code_.back() == code::invert(c)) {
    code_.pop_back();
  } else {
    code_.push_back(c);
  }
}

std::string Word::str() const {
  if (code_.empty()) return "1";
  std::string s;
  s.reserve(code_.size());
  for (char c : code_) s.push_back(code::to_text(c));
  return s;
}

bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
  if (a.code_.size() != b.code_.size()) return a.code_.size() <=> b.code_.size();
  const int c = a.code_.compare(b.code_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Word multiply(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorKind::kRankMismatch,
                "rank " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
  const std::string& x = a.code();
  const std::string& y = b.code();
  std::size_t k = 0;
  while (k < x.size() && k < y.size() && x[x.size() - 1 - k] == code::invert(y[k])) ++k;
  std::string out;
  out.reserve(x.size() + y.size() - 2 * k);
  out.append(x, 0, x.size() - k);
  out.append(y, k, std::string::npos);
  return Word::from_code(a.rank(), std::move(out));
}

Word multiply(const Word& a, const Word& b, const Word& c) { return multiply(multiply(a, b), c); }

Word inverse(const Word& w) { return w.inverse(); }

Word apply_hom(std::span<const Word> images, const Word& w) {
  if (static_cast<int>(images.size()) != w.rank()) {
    throw Error(ErrorKind::kRankMismatch, "image count " + std::to_string(images.size()) +
                                              " vs word rank " + std::to_string(w.rank()));
  }
  const int target = images.empty() ? 0 : images.front().rank();
  Word out(target);
  for (char c : w.code()) {
    const Word& img = images[code::generator(c) - 1];
    if (img.rank() != target) throw Error(ErrorKind::kRankMismatch, "images of mixed rank");
    if (static_cast<unsigned char>(c) & code::kInverseBit) {
      const std::string& s = img.code();
      for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_reduced(code::decode(code::invert(*it)));
    } else {
      for (char d : img.code()) out.push_reduced(code::decode(d));
    }
  }
  return out;
}

std::string letter_text(Letter l) {
  return std::string(1, code::to_text(code::encode(l)));
}

}  // namespace sqcore
