#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sqcore {

class MarkedGraph;

// Undirected multigraph with loops; edges keep their (tail, head) order only
// for display.
struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> vertex_labels;  // optional
  std::vector<std::string> edge_labels;    // optional

  std::vector<int> degrees() const;  // a loop counts twice
  bool connected() const;
};

Multigraph to_multigraph(const MarkedGraph& g);

// Vertex bijection a -> b preserving edge multiplicities, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Multigraph& a, const Multigraph& b);
inline bool isomorphic(const Multigraph& a, const Multigraph& b) { return find_isomorphism(a, b).has_value(); }

std::string export_dot(const Multigraph& g, const std::string& name);
// Double-quoted DOT identifier.
std::string dot_quote(const std::string& s);

}  // namespace sqcore
