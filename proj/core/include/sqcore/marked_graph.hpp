#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sqcore/automorphism.hpp"
#include "sqcore/clopen.hpp"
#include "sqcore/word.hpp"

namespace sqcore {

struct GraphEdge {
  std::string name;
  int tail = -1;
  int head = -1;
  bool in_tree = false;
  Word marking;    // non-tree edges: image of the edge's own letter in the standard basis
  int letter = 0;  // non-tree edges: own generator index 1..g, in file order
};

// A vertex of the universal cover: deck word over the graph's own letters
// (one per non-tree edge) and a vertex of the graph.
struct TreeVertex {
  Word deck;
  int vertex = 0;
  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

// An oriented edge of the universal cover. The lift (h, e) runs from
// (h, tail e) to (h, head e) for a tree edge and to (h x, head e) for the
// non-tree edge with letter x; forward = false reverses it.
struct TreeEdge {
  Word deck;
  int edge = 0;
  bool forward = true;
  TreeEdge reversed() const { return TreeEdge{deck, edge, !forward}; }
  bool same_edge(const TreeEdge& o) const { return edge == o.edge && deck == o.deck; }
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct VertexTripartition {
  std::array<TreeEdge, 3> edges;  // oriented away from the vertex
  std::array<ClopenSet, 3> parts; // far side of each edge
};

class MarkedGraph {
 public:
  MarkedGraph() = default;

  // Certifies the data. Throws NotTrivalent, WrongCellCounts, NotSpanning,
  // NotABasis or InvalidCell.
  static MarkedGraph build(int genus, std::vector<std::string> vertices, std::vector<GraphEdge> edges,
                           int basepoint);
  // Parses the line format and certifies. Throws ParseError for syntax.
  static MarkedGraph parse(std::string_view text);
  std::string serialize() const;

  int genus() const noexcept { return genus_; }
  int vertex_count() const noexcept { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  const GraphEdge& edge(int e) const { return edges_.at(e); }
  int basepoint() const noexcept { return basepoint_; }
  // Own letters -> standard basis.
  const Automorphism& marking() const noexcept { return marking_; }

  // Endpoints of an oriented lifted edge.
  TreeVertex tail(const TreeEdge& e) const;
  TreeVertex head(const TreeEdge& e) const;
  // The three lifted edges at v, oriented away from v, in incidence order.
  std::array<TreeEdge, 3> cover_neighbors(const TreeVertex& v) const;
  TreeVertex base_vertex() const { return TreeVertex{Word(genus_), basepoint_}; }

  // Far side of the lifted edge in the graph's own letters.
  ClopenSet own_far_side(const TreeEdge& e) const;
  // Far side transported into the standard basis.
  ClopenSet far_side(const TreeEdge& e) const;
  Bipartition half_space(const TreeEdge& e) const;
  VertexTripartition vertex_tripartition(const TreeVertex& v) const;

  // Standard-basis far side of the canonical forward lift of e.
  const ClopenSet& base_far_side(int e) const { return std_far_.at(e); }

  void check(const TreeVertex& v) const;
  void check(const TreeEdge& e) const;

 private:
  int genus_ = 0;
  std::vector<std::string> vertex_names_;
  std::vector<GraphEdge> edges_;
  int basepoint_ = 0;
  Automorphism marking_;
  std::vector<std::vector<std::pair<int, bool>>> incidence_;  // (edge, vertex is tail)
  std::vector<ClopenSet> own_far_;
  std::vector<ClopenSet> std_far_;
};

TreeVertex translate(const Word& g, const TreeVertex& v);
TreeEdge translate(const Word& g, const TreeEdge& e);

struct OrbitCell {
  int cell = 0;
  Word deck;
};
OrbitCell orbit_normalize(const TreeVertex& v);
OrbitCell orbit_normalize(const TreeEdge& e);

std::string describe(const MarkedGraph& g, const TreeEdge& e);
std::string describe(const MarkedGraph& g, const TreeVertex& v);

// Memoizes standard-basis half-spaces of forward lifts. Not thread-safe:
// give each worker its own cache.
class HalfSpaceCache {
 public:
  explicit HalfSpaceCache(const MarkedGraph& g) : graph_(&g) {}
  // Half-space of the forward lift (deck, edge).
  const Bipartition& forward(const Word& deck, int edge);
  const Bipartition& forward(const TreeEdge& e) { return forward(e.deck, e.edge); }
  // Far side of an oriented edge.
  const ClopenSet& plus(const TreeEdge& e) {
    const Bipartition& b = forward(e.deck, e.edge);
    return e.forward ? b.plus : b.minus;
  }
  const MarkedGraph& graph() const { return *graph_; }
  std::size_t size() const { return map_.size(); }

 private:
  const MarkedGraph* graph_;
  std::unordered_map<std::string, Bipartition> map_;
};

}  // namespace sqcore
