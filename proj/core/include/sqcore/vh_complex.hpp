#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqcore {

// Black edges are horizontal (first tree), red edges vertical (second tree).
enum class Color : std::uint8_t { kBlack = 0, kRed = 1 };

inline Color other(Color c) { return c == Color::kBlack ? Color::kRed : Color::kBlack; }
const char* to_string(Color c) noexcept;

struct VEdge {
  int tail = 0;
  int head = 0;
  Color color = Color::kBlack;
  std::string label;
};

struct Side {
  int edge = 0;
  bool forward = true;
};

// Boundary read cyclically; corner k is the start of side k.
struct VSquare {
  std::array<Side, 4> sides;
  std::string label;
};

class VHComplex {
 public:
  VHComplex() = default;
  // Checks that every square boundary is a closed loop alternating in
  // color. Throws Error(kIncidence).
  VHComplex(int genus, std::vector<std::string> vertex_labels, std::vector<VEdge> edges,
            std::vector<VSquare> squares);

  static VHComplex parse(std::string_view text);
  std::string serialize() const;

  // Genus recorded by the producer; 0 if unknown.
  int genus() const noexcept { return genus_; }
  int vertex_count() const noexcept { return static_cast<int>(vertex_labels_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int square_count() const noexcept { return static_cast<int>(squares_.size()); }
  int edge_count(Color c) const;

  const std::vector<std::string>& vertex_labels() const noexcept { return vertex_labels_; }
  const std::vector<VEdge>& edges() const noexcept { return edges_; }
  const std::vector<VSquare>& squares() const noexcept { return squares_; }
  const VEdge& edge(int e) const { return edges_.at(e); }
  const VSquare& square(int s) const { return squares_.at(s); }

  int corner(int square, int k) const;
  // (square, side index) for each occurrence of the edge in a boundary.
  const std::vector<std::pair<int, int>>& edge_squares(int e) const { return edge_squares_.at(e); }
  // (square, corner index) for each corner at the vertex.
  const std::vector<std::pair<int, int>>& vertex_corners(int v) const { return vertex_corners_.at(v); }
  // Edge ids incident to v, a loop listed once.
  const std::vector<int>& vertex_edges(int v) const { return vertex_edges_.at(v); }

  VHComplex swap_colors() const;
  VHComplex with_genus(int genus) const;

 private:
  void index();

  int genus_ = 0;
  std::vector<std::string> vertex_labels_;
  std::vector<VEdge> edges_;
  std::vector<VSquare> squares_;
  std::vector<std::vector<std::pair<int, int>>> edge_squares_;
  std::vector<std::vector<std::pair<int, int>>> vertex_corners_;
  std::vector<std::vector<int>> vertex_edges_;
};

}  // namespace sqcore
