#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "sqcore/vh_complex.hpp"

namespace sqtest {

using sqcore::Color;
using sqcore::Side;
using sqcore::VEdge;
using sqcore::VHComplex;
using sqcore::VSquare;

// `pages` squares sharing one black edge v0 -> v1.
inline VHComplex book(int pages, int genus = 2) {
  std::vector<std::string> labels{"v0", "v1"};
  std::vector<VEdge> edges{{0, 1, Color::kBlack, "b"}};
  std::vector<VSquare> squares;
  for (int i = 0; i < pages; ++i) {
    const int x = static_cast<int>(labels.size());
    labels.push_back("x" + std::to_string(i));
    labels.push_back("y" + std::to_string(i));
    const int c = static_cast<int>(edges.size());
    edges.push_back({x, x + 1, Color::kBlack, "c" + std::to_string(i)});
    edges.push_back({0, x, Color::kRed, "p" + std::to_string(i)});
    edges.push_back({1, x + 1, Color::kRed, "q" + std::to_string(i)});
    squares.push_back(VSquare{{Side{0, true}, Side{c + 2, true}, Side{c, false}, Side{c + 1, false}}, ""});
  }
  return VHComplex(genus, labels, edges, squares);
}

// Two squares side by side sharing the red edge v1 -> v4.
inline VHComplex strip() {
  std::vector<VEdge> edges{{0, 1, Color::kBlack, ""}, {1, 2, Color::kBlack, ""}, {3, 4, Color::kBlack, ""},
                           {4, 5, Color::kBlack, ""}, {0, 3, Color::kRed, ""},   {1, 4, Color::kRed, ""},
                           {2, 5, Color::kRed, ""}};
  std::vector<VSquare> squares{{{Side{0, true}, Side{5, true}, Side{2, false}, Side{4, false}}, ""},
                               {{Side{1, true}, Side{6, true}, Side{3, false}, Side{5, false}}, ""}};
  return VHComplex(2, {"v0", "v1", "v2", "v3", "v4", "v5"}, edges, squares);
}

// Two squares glued into an annulus: the red hyperplane closes up.
inline VHComplex cylinder() {
  // 0 = u0, 1 = u1, 2 = t0, 3 = t1
  std::vector<VEdge> edges{{0, 1, Color::kBlack, "c0"}, {1, 0, Color::kBlack, "c1"}, {2, 3, Color::kBlack, "a0"},
                           {3, 2, Color::kBlack, "a1"}, {0, 2, Color::kRed, "r0"},   {1, 3, Color::kRed, "r1"}};
  std::vector<VSquare> squares{{{Side{0, true}, Side{5, true}, Side{2, false}, Side{4, false}}, ""},
                               {{Side{1, true}, Side{4, true}, Side{3, false}, Side{5, false}}, ""}};
  return VHComplex(2, {"u0", "u1", "t0", "t1"}, edges, squares);
}

// The same complex with every cell renumbered, every square boundary
// rotated or reflected, and some edges reversed.
inline VHComplex scrambled(const VHComplex& c, std::mt19937_64& rng) {
  auto perm = [&rng](int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  };
  const auto pv = perm(c.vertex_count()), pe = perm(c.edge_count()), ps = perm(c.square_count());
  std::vector<bool> rev(c.edge_count());
  for (auto&& r : rev) r = rng() & 1;
  std::vector<std::string> labels(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) labels[pv[v]] = c.vertex_labels()[v];
  std::vector<VEdge> edges(c.edge_count());
  for (int e = 0; e < c.edge_count(); ++e) {
    VEdge x = c.edge(e);
    x.tail = pv[x.tail];
    x.head = pv[x.head];
    if (rev[e]) std::swap(x.tail, x.head);
    edges[pe[e]] = x;
  }
  std::vector<VSquare> squares(c.square_count());
  for (int s = 0; s < c.square_count(); ++s) {
    std::array<Side, 4> sides = c.square(s).sides;
    for (auto& sd : sides) {
      sd.forward = sd.forward != rev[sd.edge];
      sd.edge = pe[sd.edge];
    }
    if (rng() & 1) {
      // Reverse the traversal.
      std::reverse(sides.begin(), sides.end());
      for (auto& sd : sides) sd.forward = !sd.forward;
    }
    std::rotate(sides.begin(), sides.begin() + rng() % 4, sides.end());
    squares[ps[s]] = VSquare{sides, c.square(s).label};
  }
  return VHComplex(c.genus(), labels, edges, squares);
}

}  // namespace sqtest
