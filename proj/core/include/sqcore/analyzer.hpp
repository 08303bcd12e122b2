#pragma once

#include <string>
#include <vector>

#include "sqcore/links.hpp"
#include "sqcore/multigraph.hpp"
#include "sqcore/vh_complex.hpp"

namespace sqcore {

// Hyperplane dual to a class of parallel edges: its vertices are the edges
// of the class and its edges are the squares crossing them.
struct Hyperplane {
  Color color = Color::kBlack;  // color of the dual edges
  std::vector<int> edges;       // sorted
  std::vector<int> squares;     // sorted
  bool tree = false;
  std::vector<int> cycle;       // squares along a cycle when not a tree
};

std::vector<Hyperplane> hyperplanes(const VHComplex& c, Color color);

int euler_characteristic(const VHComplex& c);
bool connected(const VHComplex& c);

// Contracts every edge of the given color and every square onto its
// surviving sides. Vertices of the result are the components of the
// contracted edges; its edges are the classes of parallel edges of the
// other color.
struct Collapse {
  Multigraph graph;
  std::vector<int> vertex_of;   // complex vertex -> graph vertex
  std::vector<int> edge_of;     // complex edge -> graph edge, -1 if contracted
  std::vector<bool> flipped;    // edge runs against its class orientation
  bool oriented = true;         // false if some class cannot be oriented
};
Collapse collapse(const VHComplex& c, Color contracted);

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct ValidationReport {
  std::vector<Check> checks;
  bool ok() const;
  std::string str() const;  // one "PASS|FAIL name witness" line per check
};

struct ExpectedGraphs {
  const Multigraph* black = nullptr;  // graph the red collapse should match
  const Multigraph* red = nullptr;    // graph the black collapse should match
};

ValidationReport validate_properties(const VHComplex& c, int genus, const ExpectedGraphs& expected = {});

std::string export_dot(const VHComplex& c);
std::string export_dot(const VHComplex& c, const Hyperplane& h);

}  // namespace sqcore
