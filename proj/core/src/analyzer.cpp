#include "sqcore/analyzer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace sqcore {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // smallest member stays the root
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Sides k and k + 2 of s carry the given color.
int first_side(const VSquare& s, const VHComplex& c, Color color) {
  return c.edge(s.sides[0].edge).color == color ? 0 : 1;
}

}  // namespace

std::vector<Hyperplane> hyperplanes(const VHComplex& c, Color color) {
  UnionFind uf(c.edge_count());
  for (const auto& s : c.squares()) {
    const int k = first_side(s, c, color);
    uf.unite(s.sides[k].edge, s.sides[k + 2].edge);
  }
  std::map<int, int> index;  // root -> hyperplane
  std::vector<Hyperplane> out;
  for (int e = 0; e < c.edge_count(); ++e) {
    if (c.edge(e).color != color) continue;
    const int r = uf.find(e);
    auto [it, fresh] = index.emplace(r, static_cast<int>(out.size()));
    if (fresh) out.push_back(Hyperplane{color, {}, {}, false, {}});
    out[it->second].edges.push_back(e);
  }
  for (int s = 0; s < c.square_count(); ++s) {
    const VSquare& sq = c.square(s);
    out[index.at(uf.find(sq.sides[first_side(sq, c, color)].edge))].squares.push_back(s);
  }
  for (auto& h : out) {
    h.tree = h.squares.size() + 1 == h.edges.size();
    if (h.tree) continue;
    // Grow a spanning forest until a square closes a cycle.
    std::map<int, std::vector<std::pair<int, int>>> adj;  // edge -> (neighbour, square)
    UnionFind local(c.edge_count());
    for (int s : h.squares) {
      const VSquare& sq = c.square(s);
      const int k = first_side(sq, c, color);
      const int a = sq.sides[k].edge, b = sq.sides[k + 2].edge;
      if (local.unite(a, b)) {
        adj[a].emplace_back(b, s);
        adj[b].emplace_back(a, s);
        continue;
      }
      std::map<int, std::pair<int, int>> via{{a, {-1, -1}}};
      std::deque<int> queue{a};
      while (!queue.empty() && !via.count(b)) {
        const int x = queue.front();
        queue.pop_front();
        for (const auto& [y, t] : adj[x]) {
          if (via.emplace(y, std::make_pair(x, t)).second) queue.push_back(y);
        }
      }
      h.cycle.push_back(s);
      for (int x = b; x != a; x = via.at(x).first) h.cycle.push_back(via.at(x).second);
      break;
    }
  }
  return out;
}

int euler_characteristic(const VHComplex& c) { return c.vertex_count() - c.edge_count() + c.square_count(); }

bool connected(const VHComplex& c) {
  if (c.vertex_count() == 0) return true;
  UnionFind uf(c.vertex_count());
  int parts = c.vertex_count();
  for (const auto& e : c.edges()) parts -= uf.unite(e.tail, e.head);
  return parts == 1;
}

Collapse collapse(const VHComplex& c, Color contracted) {
  const Color kept = other(contracted);
  Collapse out;
  UnionFind uf(c.vertex_count());
  for (const auto& e : c.edges()) {
    if (e.color == contracted) uf.unite(e.tail, e.head);
  }
  std::map<int, int> vid;
  out.vertex_of.resize(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) {
    auto [it, fresh] = vid.emplace(uf.find(v), static_cast<int>(vid.size()));
    out.vertex_of[v] = it->second;
    if (fresh) out.graph.vertex_labels.push_back(c.vertex_labels()[v]);
  }
  out.graph.vertices = static_cast<int>(vid.size());

  out.edge_of.assign(c.edge_count(), -1);
  out.flipped.assign(c.edge_count(), false);
  const auto classes = hyperplanes(c, kept);
  std::vector<std::vector<std::pair<int, bool>>> parallel(c.edge_count());  // (edge, same direction)
  for (const auto& s : c.squares()) {
    const int k = first_side(s, c, kept);
    const Side& a = s.sides[k];
    const Side& b = s.sides[k + 2];
    // Opposite sides run the same way when traversed in opposite senses.
    const bool same = a.forward != b.forward;
    parallel[a.edge].emplace_back(b.edge, same);
    parallel[b.edge].emplace_back(a.edge, same);
  }
  for (std::size_t h = 0; h < classes.size(); ++h) {
    const int rep = classes[h].edges.front();
    std::vector<bool> seen(c.edge_count(), false);
    seen[rep] = true;
    std::deque<int> queue{rep};
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      out.edge_of[e] = static_cast<int>(h);
      for (const auto& [f, same] : parallel[e]) {
        const bool flip = out.flipped[e] != !same;
        if (seen[f]) {
          if (out.flipped[f] != flip) out.oriented = false;
          continue;
        }
        seen[f] = true;
        out.flipped[f] = flip;
        queue.push_back(f);
      }
    }
    const VEdge& r = c.edge(rep);
    out.graph.edges.emplace_back(out.vertex_of[r.tail], out.vertex_of[r.head]);
    out.graph.edge_labels.push_back(r.label);
  }
  return out;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string ValidationReport::str() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.witness.empty()) out << ' ' << c.witness;
    out << '\n';
  }
  return out.str();
}

namespace {

std::string join(const std::vector<int>& xs, const char* prefix) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += prefix + std::to_string(xs[i]);
  }
  return s;
}

Check collapse_check(const VHComplex& c, Color contracted, int genus, const Multigraph* expected) {
  const Collapse col = collapse(c, contracted);
  Check ch{std::string("collapse-") + to_string(contracted), false, ""};
  const auto deg = col.graph.degrees();
  const auto bad = std::find_if(deg.begin(), deg.end(), [](int d) { return d != 3; });
  if (!col.graph.connected()) {
    ch.witness = "graph is disconnected";
  } else if (bad != deg.end()) {
    ch.witness = "vertex " + std::to_string(bad - deg.begin()) + " has valence " + std::to_string(*bad);
  } else if (static_cast<int>(col.graph.edges.size()) != 3 * genus - 3) {
    ch.witness = std::to_string(col.graph.edges.size()) + " edges, expected " + std::to_string(3 * genus - 3);
  } else if (!col.oriented) {
    ch.witness = "a class of parallel edges cannot be oriented";
  } else if (expected && !isomorphic(col.graph, *expected)) {
    ch.witness = "not isomorphic to the input graph";
  } else {
    ch.pass = true;
    ch.witness = "V=" + std::to_string(col.graph.vertices) + " E=" + std::to_string(col.graph.edges.size()) +
                 (expected ? " isomorphic-to-input" : "");
  }
  return ch;
}

}  // namespace

ValidationReport validate_properties(const VHComplex& c, int genus, const ExpectedGraphs& expected) {
  ValidationReport r;
  r.checks.push_back(Check{"vh-structure", true,
                           "V=" + std::to_string(c.vertex_count()) + " E=" + std::to_string(c.edge_count()) +
                               " F=" + std::to_string(c.square_count())});
  r.checks.push_back(Check{"genus", genus >= 2, "g=" + std::to_string(genus)});
  {
    Check ch{"connected", connected(c), ""};
    if (!ch.pass) {
      UnionFind uf(c.vertex_count());
      for (const auto& e : c.edges()) uf.unite(e.tail, e.head);
      for (int v = 0; v < c.vertex_count(); ++v) {
        if (uf.find(v) != 0) {
          ch.witness = "vertex " + std::to_string(v) + " is not reachable from vertex 0";
          break;
        }
      }
    }
    r.checks.push_back(ch);
  }
  const int chi = euler_characteristic(c);
  r.checks.push_back(Check{"euler", chi == 1 - genus, "chi=" + std::to_string(chi) + " expected " + std::to_string(1 - genus)});
  for (Color col : {Color::kBlack, Color::kRed}) {
    const auto hs = hyperplanes(c, col);
    Check trees{std::string("hyperplanes-") + to_string(col) + "-trees", true, ""};
    for (std::size_t i = 0; i < hs.size() && trees.pass; ++i) {
      if (!hs[i].tree) {
        trees.pass = false;
        trees.witness = "hyperplane " + std::to_string(i) + " (edges " + join(hs[i].edges, "e") +
                        ") has cycle through squares " + join(hs[i].cycle, "s");
      }
    }
    if (trees.pass) trees.witness = std::to_string(hs.size()) + " trees";
    r.checks.push_back(trees);
    r.checks.push_back(Check{std::string("hyperplanes-") + to_string(col) + "-count",
                             static_cast<int>(hs.size()) == 3 * genus - 3,
                             std::to_string(hs.size()) + " expected " + std::to_string(3 * genus - 3)});
  }
  {
    Check ch{"links", true, ""};
    std::map<int, int> census;
    for (int v = 0; v < c.vertex_count(); ++v) {
      const int t = classify_link(vertex_link(c, v));
      if (t == 0 && ch.pass) {
        ch.pass = false;
        ch.witness = "vertex " + std::to_string(v) + " has an inadmissible link";
      }
      ++census[t];
    }
    if (ch.pass) {
      for (const auto& [t, n] : census) {
        if (!ch.witness.empty()) ch.witness += ' ';
        ch.witness += admissible_links()[t - 1].name() + "x" + std::to_string(n);
      }
    }
    r.checks.push_back(ch);
  }
  r.checks.push_back(collapse_check(c, Color::kRed, genus, expected.black));
  r.checks.push_back(collapse_check(c, Color::kBlack, genus, expected.red));
  return r;
}

std::string export_dot(const VHComplex& c) {
  std::ostringstream out;
  out << "graph vhcomplex {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < c.vertex_count(); ++v) {
    out << "  v" << v << " [label=" << dot_quote(c.vertex_labels()[v]) << "];\n";
  }
  for (int e = 0; e < c.edge_count(); ++e) {
    const VEdge& x = c.edge(e);
    out << "  v" << x.tail << " -- v" << x.head << " [id=\"e" << e << "\", color=" << to_string(x.color)
        << ", label=" << dot_quote(x.label) << "];\n";
  }
  for (int s = 0; s < c.square_count(); ++s) {
    out << "  s" << s << " [shape=box, style=dashed, label=" << dot_quote(c.square(s).label) << "];\n";
    for (int k = 0; k < 4; ++k) out << "  s" << s << " -- v" << c.corner(s, k) << " [style=dotted];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const VHComplex& c, const Hyperplane& h) {
  std::ostringstream out;
  out << "graph hyperplane {\n";
  for (int e : h.edges) out << "  e" << e << " [label=" << dot_quote(c.edge(e).label) << "];\n";
  for (int s : h.squares) {
    const VSquare& sq = c.square(s);
    const int k = first_side(sq, c, h.color);
    out << "  e" << sq.sides[k].edge << " -- e" << sq.sides[k + 2].edge << " [id=\"s" << s
        << "\", color=" << to_string(other(h.color)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sqcore
