#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sqcore/vh_complex.hpp"

namespace sqcore {

// Cross/circle table at a vertex pair: t[i][j] is true (a cross) when the
// i-th region of the first tree meets the j-th region of the second.
using LinkTable = std::array<std::array<bool, 3>, 3>;

// A cross in every row and column, and at least two crosses in the union
// of any row with any column.
bool table_admissible(const LinkTable& t);
// Slot (i, j) is a link edge when it holds a cross, row i and column j each
// hold another cross, and the 2x2 block avoiding both holds a cross.
LinkTable link_of_table(const LinkTable& t);

// Bipartite graph inside K(3,3): rows are black link vertices, columns red.
struct LinkShape {
  int black = 0;
  int red = 0;
  std::uint16_t adjacency = 0;  // bit 3*i+j
  int vertex_count() const { return black + red; }
  int edge_count() const;
};

// Canonical form up to relabelling within each side and swapping sides;
// bits of unused rows and columns are zero.
LinkShape canonical_shape(const LinkShape& s);

struct LinkType {
  int id = 0;  // 1-based
  LinkShape shape;
  int genus() const { return 1 - shape.vertex_count() + shape.edge_count(); }
  std::string name() const;
};

// The nonempty links produced by admissible tables, ordered by vertex count,
// edge count, then adjacency bits.
const std::vector<LinkType>& admissible_links();

struct LinkVertex {
  int edge = 0;
  bool at_tail = true;  // which end of the edge sits at the vertex
  Color color = Color::kBlack;
  friend bool operator==(const LinkVertex&, const LinkVertex&) = default;
};

struct VertexLink {
  std::vector<LinkVertex> vertices;
  struct Arc {
    int a;       // index into vertices
    int b;
    int square;  // the corner's square
  };
  std::vector<Arc> arcs;

  int black_count() const;
  int red_count() const;
  int degree(int i) const;
};

VertexLink vertex_link(const VHComplex& c, int v);

// 1..9, or 0 when the link is not one of the admissible types.
int classify_link(const VertexLink& link);

}  // namespace sqcore
