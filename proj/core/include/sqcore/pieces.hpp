#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "sqcore/vh_complex.hpp"

namespace sqcore {

enum class TwoPieceType : std::uint8_t { kDisc, kAnnulus, kPants };
const char* to_string(TwoPieceType t) noexcept;

// Disc, annulus or pair of pants for an edge in 1, 2 or 3 squares.
// Throws DegreeOutOfRange otherwise.
TwoPieceType two_piece_type(const VHComplex& c, int edge);

// One end of a 2-piece, as seen from the 3-piece at that end.
struct PieceEnd {
  int piece = 0;
  bool at_tail = true;
  friend bool operator==(const PieceEnd&, const PieceEnd&) = default;
};

// A 1-piece as a circle inside a boundary pattern, joining a black and a
// red 2-piece.
struct Circle {
  int one_piece = 0;
  PieceEnd black;
  PieceEnd red;
};

struct BoundaryPattern {
  std::vector<PieceEnd> pieces;  // planar surfaces of the closed surface
  std::vector<Circle> circles;
  int link_type = 0;
  int genus = 0;  // 1 - pieces + circles
  // Positive genus: the 1-pieces are not all trivial in the handlebody.
  bool pi1_nontrivial() const { return genus > 0; }
};

// Throws InvalidLink when the vertex link is not admissible.
BoundaryPattern boundary_pattern(const VHComplex& c, int vertex);

struct OnePiece {
  std::array<int, 2> black{};
  std::array<int, 2> red{};
  std::array<int, 4> three{};  // corner 3-pieces in boundary order
};

struct TwoPiece {
  Color color = Color::kBlack;
  TwoPieceType type = TwoPieceType::kDisc;
  int tail = 0;  // the two 3-pieces it lies on
  int head = 0;
  std::vector<int> circles;  // boundary 1-pieces
};

struct ThreePiece {
  BoundaryPattern pattern;
};

struct Sphere {
  Color color = Color::kBlack;
  std::vector<int> two_pieces;
  std::vector<int> one_pieces;
  int euler = 0;  // sum over 2-pieces of (2 - boundary circles)
};

// A component of the complement of one color's spheres.
struct Region {
  Color color = Color::kBlack;
  std::vector<int> three_pieces;
  int boundary_spheres = 0;
};

struct SphereSystemCertificate {
  std::array<std::vector<Sphere>, 2> spheres;  // indexed by color
  std::array<std::vector<Region>, 2> regions;
  int intersection_number = 0;
};

struct PieceDecomposition {
  int genus = 0;
  std::vector<OnePiece> one;
  std::vector<TwoPiece> two;
  std::vector<ThreePiece> three;
  SphereSystemCertificate certificate;

  std::string serialize() const;
  // Throws ParseError.
  static PieceDecomposition parse(std::string_view text);
};

// Regions cut out by the spheres of one color, each with its number of
// boundary spheres (boundary components, counted with multiplicity).
std::vector<Region> complement_check(const VHComplex& c, Color color);

// Throws DegreeOutOfRange, InvalidLink, HyperplaneNotTree,
// ComplementNotThreeHoled, WrongCellCounts or NotStandardForm.
PieceDecomposition build_decomposition(const VHComplex& c);

// Rebuilds the square complex from the pieces: 3-pieces become vertices,
// 2-pieces edges, and each 1-piece a square whose boundary is traced
// through the circles of the boundary patterns. Throws IncidenceViolation.
VHComplex dual_complex(const PieceDecomposition& pd);

}  // namespace sqcore
