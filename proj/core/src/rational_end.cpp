#include "sqcore/rational_end.hpp"

#include <algorithm>

#include "sqcore/errors.hpp"

namespace sqcore {

namespace {

std::string primitive_root(const std::string& v) {
  const std::size_t n = v.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = v[i] == v[i - d];
    if (periodic) return v.substr(0, d);
  }
  return v;
}

}  // namespace

RationalEnd RationalEnd::make(const Word& head, const Word& period) {
  if (head.rank() != period.rank()) throw Error(ErrorKind::kRankMismatch, "end head/period rank");
  if (period.empty()) throw Error(ErrorKind::kParse, "rational end needs a nontrivial period");
  const int rank = period.rank();
  std::string u = head.code();
  std::string v = period.code();

  // v = c v' c^-1 gives u v^inf = (u c) v'^inf.
  while (v.size() >= 2 && v.front() == code::invert(v.back())) {
    const char c = v.front();
    if (!u.empty() && u.back() == code::invert(c)) {
      u.pop_back();
    } else {
      u.push_back(c);
    }
    v = v.substr(1, v.size() - 2);
  }
  while (!u.empty() && u.back() == code::invert(v.front())) {
    u.pop_back();
    std::rotate(v.begin(), v.begin() + 1, v.end());
  }
  v = primitive_root(v);
  while (!u.empty() && u.back() == v.back()) {
    u.pop_back();
    std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
  }
  RationalEnd e;
  e.head_ = Word::from_code(rank, std::move(u));
  e.period_ = Word::from_code(rank, std::move(v));
  return e;
}

RationalEnd RationalEnd::parse(int rank, std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw Error(ErrorKind::kParse, "rational end must look like u(v)");
  }
  const std::string_view u = text.substr(0, open);
  const std::string_view v = text.substr(open + 1, text.size() - open - 2);
  return make(u.empty() ? Word(rank) : Word::parse(rank, u), Word::parse(rank, v));
}

Letter RationalEnd::letter_at(std::size_t i) const {
  if (i < head_.size()) return head_[i];
  return period_[(i - head_.size()) % period_.size()];
}

Word RationalEnd::prefix(std::size_t n) const {
  std::string s;
  s.reserve(n);
  const std::string& u = head_.code();
  const std::string& v = period_.code();
  for (std::size_t i = 0; i < n; ++i) {
    s.push_back(i < u.size() ? u[i] : v[(i - u.size()) % v.size()]);
  }
  return Word::from_code(rank(), std::move(s));
}

std::string RationalEnd::str() const {
  return (head_.empty() ? std::string() : head_.str()) + "(" + period_.str() + ")";
}

}  // namespace sqcore
