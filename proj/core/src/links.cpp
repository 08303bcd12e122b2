#include "sqcore/links.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

namespace sqcore {

namespace {

int row_count(const LinkTable& t, int i) { return t[i][0] + t[i][1] + t[i][2]; }
int col_count(const LinkTable& t, int j) { return t[0][j] + t[1][j] + t[2][j]; }

constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

bool bit(std::uint16_t m, int i, int j) { return (m >> (3 * i + j)) & 1; }

}  // namespace

bool table_admissible(const LinkTable& t) {
  for (int i = 0; i < 3; ++i) {
    if (row_count(t, i) == 0 || col_count(t, i) == 0) return false;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (row_count(t, i) + col_count(t, j) - t[i][j] < 2) return false;
    }
  }
  return true;
}

LinkTable link_of_table(const LinkTable& t) {
  LinkTable out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!t[i][j] || row_count(t, i) < 2 || col_count(t, j) < 2) continue;
      bool block = false;
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) block = block || (k != i && l != j && t[k][l]);
      }
      out[i][j] = block;
    }
  }
  return out;
}

int LinkShape::edge_count() const { return std::popcount(static_cast<unsigned>(adjacency)); }

LinkShape canonical_shape(const LinkShape& s) {
  LinkShape best{};
  bool have = false;
  for (int swap = 0; swap < 2; ++swap) {
    const int rows = swap ? s.red : s.black;
    const int cols = swap ? s.black : s.red;
    for (const auto& p : kPerms) {
      for (const auto& q : kPerms) {
        // Unused rows and columns must land on the unused slots.
        bool fits = true;
        for (int i = 0; i < 3; ++i) {
          if ((i < rows) != (p[i] < rows) || (i < cols) != (q[i] < cols)) fits = false;
        }
        if (!fits) continue;
        std::uint16_t m = 0;
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            const bool b = swap ? bit(s.adjacency, j, i) : bit(s.adjacency, i, j);
            if (b) m |= static_cast<std::uint16_t>(1u << (3 * p[i] + q[j]));
          }
        }
        const LinkShape cand{rows, cols, m};
        const auto key = [](const LinkShape& x) { return std::make_tuple(x.black, x.red, x.adjacency); };
        if (!have || key(cand) < key(best)) best = cand;
        have = true;
      }
    }
  }
  return best;
}

std::string LinkType::name() const {
  return "L" + std::to_string(id) + "(" + std::to_string(shape.vertex_count()) + "," +
         std::to_string(shape.edge_count()) + ")";
}

const std::vector<LinkType>& admissible_links() {
  static const std::vector<LinkType> types = [] {
    std::vector<LinkShape> found;
    for (int m = 0; m < 512; ++m) {
      LinkTable t{};
      for (int k = 0; k < 9; ++k) t[k / 3][k % 3] = (m >> k) & 1;
      if (!table_admissible(t)) continue;
      const LinkTable l = link_of_table(t);
      // Keep the rows and columns that carry an edge, in order.
      std::vector<int> rows, cols;
      for (int i = 0; i < 3; ++i) {
        if (l[i][0] || l[i][1] || l[i][2]) rows.push_back(i);
        if (l[0][i] || l[1][i] || l[2][i]) cols.push_back(i);
      }
      if (rows.empty()) continue;
      LinkShape s{static_cast<int>(rows.size()), static_cast<int>(cols.size()), 0};
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
          if (l[rows[i]][cols[j]]) s.adjacency |= static_cast<std::uint16_t>(1u << (3 * i + j));
        }
      }
      const LinkShape c = canonical_shape(s);
      const bool dup = std::any_of(found.begin(), found.end(), [&](const LinkShape& x) {
        return x.black == c.black && x.red == c.red && x.adjacency == c.adjacency;
      });
      if (!dup) found.push_back(c);
    }
    std::sort(found.begin(), found.end(), [](const LinkShape& a, const LinkShape& b) {
      return std::make_tuple(a.vertex_count(), a.edge_count(), a.black, a.adjacency) <
             std::make_tuple(b.vertex_count(), b.edge_count(), b.black, b.adjacency);
    });
    std::vector<LinkType> out;
    for (std::size_t i = 0; i < found.size(); ++i) out.push_back(LinkType{static_cast<int>(i) + 1, found[i]});
    return out;
  }();
  return types;
}

int VertexLink::black_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](const LinkVertex& v) { return v.color == Color::kBlack; }));
}

int VertexLink::red_count() const { return static_cast<int>(vertices.size()) - black_count(); }

int VertexLink::degree(int i) const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [i](const Arc& a) { return a.a == i || a.b == i; }));
}

VertexLink vertex_link(const VHComplex& c, int v) {
  VertexLink link;
  for (int e : c.vertex_edges(v)) {
    const VEdge& x = c.edge(e);
    if (x.tail == v) link.vertices.push_back(LinkVertex{e, true, x.color});
    if (x.head == v) link.vertices.push_back(LinkVertex{e, false, x.color});
  }
  auto index_of = [&](const LinkVertex& lv) {
    return static_cast<int>(std::find(link.vertices.begin(), link.vertices.end(), lv) - link.vertices.begin());
  };
  for (const auto& [s, k] : c.vertex_corners(v)) {
    const VSquare& sq = c.square(s);
    const Side& out = sq.sides[k];               // leaves the corner
    const Side& in = sq.sides[(k + 3) % 4];      // arrives at the corner
    const LinkVertex a{out.edge, out.forward, c.edge(out.edge).color};
    const LinkVertex b{in.edge, !in.forward, c.edge(in.edge).color};
    link.arcs.push_back(VertexLink::Arc{index_of(a), index_of(b), s});
  }
  return link;
}

int classify_link(const VertexLink& link) {
  std::vector<int> black, red;
  for (std::size_t i = 0; i < link.vertices.size(); ++i) {
    (link.vertices[i].color == Color::kBlack ? black : red).push_back(static_cast<int>(i));
  }
  if (black.size() > 3 || red.size() > 3) return 0;
  LinkShape s{static_cast<int>(black.size()), static_cast<int>(red.size()), 0};
  for (const auto& arc : link.arcs) {
    int a = arc.a, b = arc.b;
    if (link.vertices[a].color != Color::kBlack) std::swap(a, b);
    if (link.vertices[a].color != Color::kBlack || link.vertices[b].color != Color::kRed) return 0;
    const int i = static_cast<int>(std::find(black.begin(), black.end(), a) - black.begin());
    const int j = static_cast<int>(std::find(red.begin(), red.end(), b) - red.begin());
    const auto mask = static_cast<std::uint16_t>(1u << (3 * i + j));
    if (s.adjacency & mask) return 0;  // two squares on the same pair of edge ends
    s.adjacency |= mask;
  }
  const LinkShape c = canonical_shape(s);
  for (const auto& t : admissible_links()) {
    if (t.shape.black == c.black && t.shape.red == c.red && t.shape.adjacency == c.adjacency) return t.id;
  }
  return 0;
}

}  // namespace sqcore
