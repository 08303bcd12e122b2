#include "sqcore/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <tuple>

#include "sqcore/analyzer.hpp"
#include "sqcore/links.hpp"

namespace sqcore {

std::string ColoredIsomorphism::map_text() const {
  std::ostringstream out;
  out << (isomorphic ? "ISOMORPHIC" : "NOT-ISOMORPHIC") << ' ' << witness << '\n';
  if (!isomorphic) return out.str();
  for (std::size_t v = 0; v < vertex_map.size(); ++v) out << "v " << v << ' ' << vertex_map[v] << '\n';
  for (std::size_t e = 0; e < edge_map.size(); ++e) {
    out << "e " << e << ' ' << edge_map[e] << (edge_flipped[e] ? " flipped" : "") << '\n';
  }
  for (std::size_t s = 0; s < square_map.size(); ++s) out << "s " << s << ' ' << square_map[s] << '\n';
  return out.str();
}

namespace {

struct Invariants {
  std::vector<int> vertex_sig;  // link type * 16 + number of edge ends
  std::vector<int> edge_sig;    // color, degree, loop
  std::vector<std::vector<int>> square_sig;
};

Invariants invariants(const VHComplex& c) {
  Invariants inv;
  for (int v = 0; v < c.vertex_count(); ++v) {
    const VertexLink l = vertex_link(c, v);
    inv.vertex_sig.push_back(classify_link(l) * 16 + static_cast<int>(l.vertices.size()));
  }
  for (int e = 0; e < c.edge_count(); ++e) {
    const VEdge& x = c.edge(e);
    inv.edge_sig.push_back(static_cast<int>(x.color) * 64 + static_cast<int>(c.edge_squares(e).size()) * 2 +
                           (x.tail == x.head));
  }
  for (int s = 0; s < c.square_count(); ++s) {
    std::vector<int> sig;
    for (int k = 0; k < 4; ++k) {
      sig.push_back(inv.edge_sig[c.square(s).sides[k].edge]);
      sig.push_back(1000 + inv.vertex_sig[c.corner(s, k)]);
    }
    std::sort(sig.begin(), sig.end());
    inv.square_sig.push_back(std::move(sig));
  }
  return inv;
}

template <class T>
std::map<T, int> census(const std::vector<T>& xs) {
  std::map<T, int> m;
  for (const auto& x : xs) ++m[x];
  return m;
}

template <class Describe>
std::string first_census_gap(const std::map<int, int>& a, const std::map<int, int>& b, Describe describe) {
  std::map<int, std::pair<int, int>> all;
  for (const auto& [k, n] : a) all[k].first = n;
  for (const auto& [k, n] : b) all[k].second = n;
  for (const auto& [k, p] : all) {
    if (p.first != p.second) {
      return describe(k) + ": " + std::to_string(p.first) + " vs " + std::to_string(p.second);
    }
  }
  return "";
}

class Search {
 public:
  Search(const VHComplex& a, const VHComplex& b, const Invariants& ia, const Invariants& ib)
      : a_(a), b_(b), ia_(ia), ib_(ib) {
    vmap_.assign(a.vertex_count(), -1);
    vinv_.assign(b.vertex_count(), -1);
    emap_.assign(a.edge_count(), -1);
    einv_.assign(b.edge_count(), -1);
    eflip_.assign(a.edge_count(), false);
    smap_.assign(a.square_count(), -1);
    sinv_.assign(b.square_count(), -1);
  }

  bool run() { return solve_squares(); }

  ColoredIsomorphism result() const {
    ColoredIsomorphism r;
    r.isomorphic = true;
    r.vertex_map = vmap_;
    r.edge_map = emap_;
    r.edge_flipped = eflip_;
    r.square_map = smap_;
    return r;
  }

 private:
  enum Kind { kVertex, kEdge, kSquare };

  bool map_vertex(int x, int y) {
    if (vmap_[x] == y) return true;
    if (vmap_[x] != -1 || vinv_[y] != -1 || ia_.vertex_sig[x] != ib_.vertex_sig[y]) return false;
    vmap_[x] = y;
    vinv_[y] = x;
    trail_.emplace_back(kVertex, x);
    return true;
  }

  bool map_edge(int x, int y, bool flip) {
    if (emap_[x] == y) return eflip_[x] == flip;
    if (emap_[x] != -1 || einv_[y] != -1 || ia_.edge_sig[x] != ib_.edge_sig[y]) return false;
    emap_[x] = y;
    einv_[y] = x;
    eflip_[x] = flip;
    trail_.emplace_back(kEdge, x);
    const VEdge& ex = a_.edge(x);
    const VEdge& ey = b_.edge(y);
    return map_vertex(ex.tail, flip ? ey.head : ey.tail) && map_vertex(ex.head, flip ? ey.tail : ey.head);
  }

  // Side k of s goes to side (r + k) or, reflected, (r - k) of t.
  bool map_square(int s, int t, int r, bool reflect) {
    if (smap_[s] != -1 || sinv_[t] != -1 || ia_.square_sig[s] != ib_.square_sig[t]) return false;
    smap_[s] = t;
    sinv_[t] = s;
    trail_.emplace_back(kSquare, s);
    const VSquare& ss = a_.square(s);
    const VSquare& tt = b_.square(t);
    for (int k = 0; k < 4; ++k) {
      const int j = reflect ? ((r - k) % 4 + 4) % 4 : (r + k) % 4;
      const Side& x = ss.sides[k];
      const Side& y = tt.sides[j];
      const bool flip = x.forward != (y.forward != reflect);
      if (!map_edge(x.edge, y.edge, flip)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto [kind, x] = trail_.back();
      trail_.pop_back();
      if (kind == kVertex) {
        vinv_[vmap_[x]] = -1;
        vmap_[x] = -1;
      } else if (kind == kEdge) {
        einv_[emap_[x]] = -1;
        emap_[x] = -1;
      } else {
        sinv_[smap_[x]] = -1;
        smap_[x] = -1;
      }
    }
  }

  struct Candidate {
    int t, r;
    bool reflect;
  };

  std::vector<Candidate> candidates_for(int s) const {
    std::vector<Candidate> out;
    const VSquare& ss = a_.square(s);
    for (int k = 0; k < 4; ++k) {
      const int ea = ss.sides[k].edge;
      if (emap_[ea] == -1) continue;
      for (const auto& [t, j] : b_.edge_squares(emap_[ea])) {
        if (sinv_[t] != -1) continue;
        for (bool reflect : {false, true}) {
          const int r = reflect ? (j + k) % 4 : ((j - k) % 4 + 4) % 4;
          const bool flip = ss.sides[k].forward != (b_.square(t).sides[j].forward != reflect);
          if (flip == eflip_[ea]) out.push_back(Candidate{t, r, reflect});
        }
      }
      return out;
    }
    for (int t = 0; t < b_.square_count(); ++t) {
      if (sinv_[t] != -1) continue;
      for (int r = 0; r < 4; ++r) {
        for (bool reflect : {false, true}) out.push_back(Candidate{t, r, reflect});
      }
    }
    return out;
  }

  bool solve_squares() {
    // Prefer a square next to mapped cells with the fewest candidates.
    int best = -1;
    std::vector<Candidate> best_c;
    for (int s = 0; s < a_.square_count(); ++s) {
      if (smap_[s] != -1) continue;
      bool touches = false;
      for (const auto& sd : a_.square(s).sides) touches = touches || emap_[sd.edge] != -1;
      if (!touches) continue;
      auto c = candidates_for(s);
      if (best == -1 || c.size() < best_c.size()) {
        best = s;
        best_c = std::move(c);
        if (best_c.size() <= 1) break;
      }
    }
    if (best == -1) {
      for (int s = 0; s < a_.square_count() && best == -1; ++s) {
        if (smap_[s] == -1) best = s;
      }
      if (best == -1) return solve_edges();
      best_c = candidates_for(best);
    }
    for (const auto& c : best_c) {
      const std::size_t mark = trail_.size();
      if (map_square(best, c.t, c.r, c.reflect) && solve_squares()) return true;
      undo(mark);
    }
    return false;
  }

  // Edges in no square, then isolated vertices.
  bool solve_edges() {
    int x = 0;
    while (x < a_.edge_count() && emap_[x] != -1) ++x;
    if (x == a_.edge_count()) return solve_vertices();
    for (int y = 0; y < b_.edge_count(); ++y) {
      if (einv_[y] != -1) continue;
      for (bool flip : {false, true}) {
        const std::size_t mark = trail_.size();
        if (map_edge(x, y, flip) && solve_edges()) return true;
        undo(mark);
      }
    }
    return false;
  }

  bool solve_vertices() {
    int x = 0;
    while (x < a_.vertex_count() && vmap_[x] != -1) ++x;
    if (x == a_.vertex_count()) return true;
    for (int y = 0; y < b_.vertex_count(); ++y) {
      const std::size_t mark = trail_.size();
      if (map_vertex(x, y) && solve_vertices()) return true;
      undo(mark);
    }
    return false;
  }

  const VHComplex& a_;
  const VHComplex& b_;
  const Invariants& ia_;
  const Invariants& ib_;
  std::vector<int> vmap_, vinv_, emap_, einv_, smap_, sinv_;
  std::vector<bool> eflip_;
  std::vector<std::pair<Kind, int>> trail_;
};

std::vector<int> hyperplane_sizes(const VHComplex& c, Color color) {
  std::vector<int> out;
  for (const auto& h : hyperplanes(c, color)) out.push_back(static_cast<int>(h.edges.size()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ColoredIsomorphism isomorphic_colored(const VHComplex& a, const VHComplex& b) {
  ColoredIsomorphism fail;
  auto count_gap = [&](const char* what, int x, int y) {
    if (x == y) return false;
    fail.witness = std::string(what) + " " + std::to_string(x) + " vs " + std::to_string(y);
    return true;
  };
  if (count_gap("vertex count", a.vertex_count(), b.vertex_count()) ||
      count_gap("black edge count", a.edge_count(Color::kBlack), b.edge_count(Color::kBlack)) ||
      count_gap("red edge count", a.edge_count(Color::kRed), b.edge_count(Color::kRed)) ||
      count_gap("square count", a.square_count(), b.square_count())) {
    return fail;
  }
  for (Color c : {Color::kBlack, Color::kRed}) {
    if (hyperplane_sizes(a, c) != hyperplane_sizes(b, c)) {
      fail.witness = std::string(to_string(c)) + " hyperplane sizes differ";
      return fail;
    }
  }
  const Invariants ia = invariants(a), ib = invariants(b);
  auto vertex_kind = [](int k) {
    const int type = k / 16;
    return std::string("vertices with link ") + (type ? "L" + std::to_string(type) : std::string("invalid")) +
           " and " + std::to_string(k % 16) + " edge ends";
  };
  auto edge_kind = [](int k) {
    return std::string(to_string(static_cast<Color>(k / 64))) + " edges in " + std::to_string(k % 64 / 2) +
           " squares" + (k % 2 ? " (loops)" : "");
  };
  if (auto gap = first_census_gap(census(ia.vertex_sig), census(ib.vertex_sig), vertex_kind); !gap.empty()) {
    fail.witness = gap;
    return fail;
  }
  if (auto gap = first_census_gap(census(ia.edge_sig), census(ib.edge_sig), edge_kind); !gap.empty()) {
    fail.witness = gap;
    return fail;
  }
  Search search(a, b, ia, ib);
  if (!search.run()) {
    fail.witness = "invariants agree but no cell bijection exists";
    return fail;
  }
  ColoredIsomorphism ok = search.result();
  ok.witness = "V=" + std::to_string(a.vertex_count()) + " E=" + std::to_string(a.edge_count()) +
               " F=" + std::to_string(a.square_count());
  return ok;
}

}  // namespace sqcore
