#include "sqcore/clopen.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sqcore/errors.hpp"

namespace sqcore {

namespace {

constexpr std::size_t kRefinementCap = 20'000'000;

bool starts_with(std::string_view s, std::string_view p) {
  return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
}

template <typename F>
void for_each_child_letter(int rank, std::string_view q, F&& f) {
  const char forbidden = q.empty() ? '\0' : code::invert(q.back());
  for (int i = 1; i <= rank; ++i) {
    const char c = static_cast<char>(i);
    if (c != forbidden) f(c);
  }
  for (int i = 1; i <= rank; ++i) {
    const char c = static_cast<char>(i | code::kInverseBit);
    if (c != forbidden) f(c);
  }
}

void drop_dominated(std::vector<std::string>& codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<std::string> kept;
  kept.reserve(codes.size());
  for (auto& c : codes) {
    if (!kept.empty() && starts_with(c, kept.back())) continue;
    kept.push_back(std::move(c));
  }
  codes = std::move(kept);
}

bool has_extension(const std::vector<std::string>& codes, std::string_view q) {
  auto it = std::lower_bound(codes.begin(), codes.end(), q,
                             [](const std::string& a, std::string_view b) { return a < b; });
  return it != codes.end() && starts_with(*it, q);
}

void complement_below(const ClopenSet& x, std::string& q, std::vector<std::string>& out) {
  if (x.covers(q)) return;
  if (!has_extension(x.codes(), q)) {
    out.push_back(q);
    return;
  }
  for_each_child_letter(x.rank(), q, [&](char c) {
    q.push_back(c);
    complement_below(x, q, out);
    q.pop_back();
  });
}

ClopenSet refine(const std::vector<Word>& sigma, int bound, const ClopenSet& x) {
  const int rank = x.rank();
  std::vector<std::string> accepted;
  std::deque<std::string> queue;
  for_each_child_letter(rank, "", [&](char c) { queue.emplace_back(1, c); });
  std::size_t steps = 0;
  while (!queue.empty()) {
    if (++steps > kRefinementCap) {
      throw Error(ErrorKind::kInternalBoundExceeded, "boundary image refinement cap reached");
    }
    std::string v = std::move(queue.front());
    queue.pop_front();
    const Word image = apply_hom(sigma, Word::from_code(rank, v));
    const std::size_t keep = image.size() > static_cast<std::size_t>(bound) ? image.size() - bound : 0;
    const std::string_view p(image.code().data(), keep);
    if (x.covers(p)) {
      accepted.push_back(std::move(v));
    } else if (x.meets(p)) {
      for_each_child_letter(rank, v, [&](char c) {
        std::string w = v;
        w.push_back(c);
        queue.push_back(std::move(w));
      });
    }
  }
  return ClopenSet::from_codes(rank, std::move(accepted));
}

void check_same_rank(const ClopenSet& x, const ClopenSet& y) {
  if (x.rank() != y.rank()) {
    throw Error(ErrorKind::kRankMismatch, "clopen sets of rank " + std::to_string(x.rank()) +
                                              " and " + std::to_string(y.rank()));
  }
}

}  // namespace

ClopenSet ClopenSet::full(int rank) {
  ClopenSet x(rank);
  x.codes_.emplace_back();
  return x;
}

ClopenSet ClopenSet::cylinder(const Word& prefix) {
  ClopenSet x(prefix.rank());
  x.codes_.push_back(prefix.code());
  return x;
}

ClopenSet ClopenSet::canonicalize(int rank, const std::vector<Word>& prefixes) {
  std::vector<std::string> codes;
  codes.reserve(prefixes.size());
  for (const auto& w : prefixes) {
    if (w.rank() != rank) throw Error(ErrorKind::kRankMismatch, "prefix " + w.str());
    codes.push_back(w.code());
  }
  return from_codes(rank, std::move(codes));
}

ClopenSet ClopenSet::from_codes(int rank, std::vector<std::string> codes) {
  drop_dominated(codes);
  while (true) {
    std::map<std::string_view, int> children;
    for (const auto& c : codes) {
      if (!c.empty()) ++children[std::string_view(c).substr(0, c.size() - 1)];
    }
    std::vector<std::string> parents;
    for (const auto& [parent, n] : children) {
      if (n == child_count(rank, parent.size())) parents.emplace_back(parent);
    }
    if (parents.empty()) break;
    std::sort(parents.begin(), parents.end());
    std::vector<std::string> next;
    next.reserve(codes.size());
    for (auto& c : codes) {
      if (!c.empty() &&
          std::binary_search(parents.begin(), parents.end(), std::string_view(c).substr(0, c.size() - 1),
                             [](auto a, auto b) { return std::string_view(a) < std::string_view(b); })) {
        continue;
      }
      next.push_back(std::move(c));
    }
    for (auto& p : parents) next.push_back(std::move(p));
    codes = std::move(next);
    drop_dominated(codes);
  }
  ClopenSet x(rank);
  x.codes_ = std::move(codes);
  return x;
}

ClopenSet ClopenSet::parse(int rank, std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw Error(ErrorKind::kParse, "clopen set must be written {w1,w2,...}");
  }
  std::vector<Word> words;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    words.push_back(Word::parse(rank, body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return canonicalize(rank, words);
}

std::size_t ClopenSet::max_length() const {
  std::size_t m = 0;
  for (const auto& c : codes_) m = std::max(m, c.size());
  return m;
}

std::vector<Word> ClopenSet::prefixes() const {
  std::vector<std::string> sorted = codes_;
  std::sort(sorted.begin(), sorted.end(), shortlex_less);
  std::vector<Word> out;
  out.reserve(sorted.size());
  for (auto& c : sorted) out.push_back(Word::from_code(rank_, std::move(c)));
  return out;
}

bool ClopenSet::covers(std::string_view p) const {
  for (std::size_t k = 0; k <= p.size(); ++k) {
    if (std::binary_search(codes_.begin(), codes_.end(), p.substr(0, k),
                           [](auto a, auto b) { return std::string_view(a) < std::string_view(b); })) {
      return true;
    }
  }
  return false;
}

bool ClopenSet::meets(std::string_view p) const { return covers(p) || has_extension(codes_, p); }

std::string ClopenSet::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& w : prefixes()) {
    if (!first) s += ",";
    s += w.str();
    first = false;
  }
  return s + "}";
}

Bipartition Bipartition::from_plus(ClopenSet plus) {
  ClopenSet minus = complement(plus);
  return Bipartition{std::move(plus), std::move(minus)};
}

ClopenSet complement(const ClopenSet& x) {
  std::vector<std::string> out;
  std::string q;
  complement_below(x, q, out);
  return ClopenSet::from_codes(x.rank(), std::move(out));
}

ClopenSet intersect(const ClopenSet& x, const ClopenSet& y) {
  check_same_rank(x, y);
  std::vector<std::string> out;
  for (const auto& c : x.codes()) {
    if (y.covers(c)) {
      out.push_back(c);
      continue;
    }
    auto it = std::lower_bound(y.codes().begin(), y.codes().end(), c);
    for (; it != y.codes().end() && starts_with(*it, c); ++it) out.push_back(*it);
  }
  return ClopenSet::from_codes(x.rank(), std::move(out));
}

ClopenSet unite(const ClopenSet& x, const ClopenSet& y) {
  check_same_rank(x, y);
  std::vector<std::string> out = x.codes();
  out.insert(out.end(), y.codes().begin(), y.codes().end());
  return ClopenSet::from_codes(x.rank(), std::move(out));
}

bool intersects(const ClopenSet& x, const ClopenSet& y) {
  check_same_rank(x, y);
  const ClopenSet& small = x.size() <= y.size() ? x : y;
  const ClopenSet& large = x.size() <= y.size() ? y : x;
  for (const auto& c : small.codes()) {
    if (large.meets(c)) return true;
  }
  return false;
}

bool is_subset(const ClopenSet& x, const ClopenSet& y) {
  check_same_rank(x, y);
  for (const auto& c : x.codes()) {
    if (!y.covers(c)) return false;
  }
  return true;
}

bool non_nested(const Bipartition& p, const Bipartition& q) {
  return intersects(p.plus, q.plus) && intersects(p.plus, q.minus) && intersects(p.minus, q.plus) &&
         intersects(p.minus, q.minus);
}

bool contains_end(const ClopenSet& x, const RationalEnd& end) {
  if (x.rank() != end.rank()) throw Error(ErrorKind::kRankMismatch, "end rank");
  return x.covers(end.prefix(x.max_length()).code());
}

Word stable_prefix(const Automorphism& a, const Word& w) {
  const Word image = a.apply(w);
  const std::size_t k = static_cast<std::size_t>(a.cancellation_bound());
  return image.prefix(image.size() > k ? image.size() - k : 0);
}

Word stable_prefix(const ElementaryMap& f, const Word& w) {
  const Word image = apply_hom(f.images, w);
  const std::size_t k = static_cast<std::size_t>(f.cancellation);
  return image.prefix(image.size() > k ? image.size() - k : 0);
}

ClopenSet boundary_image(const ElementaryMap& f, const ClopenSet& x) {
  if (x.is_empty() || x.is_full()) return x;
  if (f.is_letter_map()) {
    std::vector<std::string> out;
    out.reserve(x.size());
    for (const auto& c : x.codes()) out.push_back(apply_hom(f.images, Word::from_code(x.rank(), c)).code());
    return ClopenSet::from_codes(x.rank(), std::move(out));
  }
  return refine(f.inverse_images, f.cancellation, x);
}

ClopenSet boundary_image(const Automorphism& a, const ClopenSet& x) {
  if (a.rank() != x.rank()) throw Error(ErrorKind::kRankMismatch, "boundary image rank");
  ClopenSet y = x;
  for (const auto& f : a.factors()) {
    if (y.is_empty() || y.is_full()) break;
    y = boundary_image(f, y);
  }
  return y;
}

ClopenSet translate(const Word& g, const ClopenSet& x) {
  if (g.rank() != x.rank()) throw Error(ErrorKind::kRankMismatch, "translation rank");
  if (g.empty() || x.is_empty() || x.is_full()) return x;
  std::vector<std::string> out;
  for (const auto& c : x.codes()) {
    const Word p = Word::from_code(x.rank(), c);
    const Word r = multiply(g, p);
    const Word r0 = multiply(g, p.prefix(p.size() - 1));
    if (r.size() == r0.size() + 1) {
      out.push_back(r.code());
    } else {
      const ClopenSet rest = complement(ClopenSet::cylinder(r0));
      out.insert(out.end(), rest.codes().begin(), rest.codes().end());
    }
  }
  return ClopenSet::from_codes(x.rank(), std::move(out));
}

}  // namespace sqcore
