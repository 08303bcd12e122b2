#include "sqcore/marked_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sqcore/errors.hpp"

namespace sqcore {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

MarkedGraph MarkedGraph::build(int genus, std::vector<std::string> vertices, std::vector<GraphEdge> edges,
                               int basepoint) {
  if (genus < 2) throw Error(ErrorKind::kWrongCellCounts, "genus must be at least 2");
  const int nv = static_cast<int>(vertices.size());
  const int ne = static_cast<int>(edges.size());
  if (basepoint < 0 || basepoint >= nv) throw Error(ErrorKind::kInvalidCell, "basepoint out of range");
  std::vector<int> valence(nv, 0);
  for (const auto& e : edges) {
    if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv) {
      throw Error(ErrorKind::kInvalidCell, "edge " + e.name + " has an unknown endpoint");
    }
    ++valence[e.tail];
    ++valence[e.head];
  }
  for (int v = 0; v < nv; ++v) {
    if (valence[v] != 3) {
      throw Error(ErrorKind::kNotTrivalent,
                  "vertex " + vertices[v] + " has valence " + std::to_string(valence[v]));
    }
  }
  if (nv != 2 * genus - 2 || ne != 3 * genus - 3) {
    throw Error(ErrorKind::kWrongCellCounts,
                std::to_string(nv) + " vertices and " + std::to_string(ne) + " edges; genus " +
                    std::to_string(genus) + " needs " + std::to_string(2 * genus - 2) + " and " +
                    std::to_string(3 * genus - 3));
  }
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  int tree_edges = 0;
  for (const auto& e : edges) {
    if (!e.in_tree) continue;
    ++tree_edges;
    const int a = find_root(parent, e.tail);
    const int b = find_root(parent, e.head);
    if (a == b) throw Error(ErrorKind::kNotSpanning, "tree edge " + e.name + " closes a cycle");
    parent[a] = b;
  }
  if (tree_edges != nv - 1) {
    throw Error(ErrorKind::kNotSpanning, "spanning tree has " + std::to_string(tree_edges) +
                                             " edges, needs " + std::to_string(nv - 1));
  }

  MarkedGraph g;
  g.genus_ = genus;
  g.vertex_names_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.basepoint_ = basepoint;
  std::vector<Word> images;
  int letter = 0;
  for (auto& e : g.edges_) {
    if (e.in_tree) {
      e.letter = 0;
      e.marking = Word(genus);
      continue;
    }
    e.letter = ++letter;
    if (e.marking.rank() != genus) {
      throw Error(ErrorKind::kRankMismatch, "marking of edge " + e.name + " has the wrong rank");
    }
    images.push_back(e.marking);
  }
  g.marking_ = Automorphism::make(std::move(images));

  g.incidence_.assign(nv, {});
  for (int i = 0; i < ne; ++i) {
    g.incidence_[g.edges_[i].tail].emplace_back(i, true);
    g.incidence_[g.edges_[i].head].emplace_back(i, false);
  }

  // Far sides of the canonical lifts, in own letters.
  for (int i = 0; i < ne; ++i) {
    const GraphEdge& e = g.edges_[i];
    std::vector<std::string> codes;
    if (!e.in_tree) {
      codes.emplace_back(1, code::encode(e.letter));
    } else {
      std::vector<int> comp(nv);
      std::iota(comp.begin(), comp.end(), 0);
      for (int j = 0; j < ne; ++j) {
        if (j != i && g.edges_[j].in_tree) {
          comp[find_root(comp, g.edges_[j].tail)] = find_root(comp, g.edges_[j].head);
        }
      }
      const int side = find_root(comp, e.head);
      for (const auto& x : g.edges_) {
        if (x.in_tree) continue;
        if (find_root(comp, x.tail) == side) codes.emplace_back(1, code::encode(x.letter));
        if (find_root(comp, x.head) == side) codes.emplace_back(1, code::encode(-x.letter));
      }
    }
    g.own_far_.push_back(ClopenSet::from_codes(genus, std::move(codes)));
    g.std_far_.push_back(boundary_image(g.marking_, g.own_far_.back()));
  }
  return g;
}

MarkedGraph MarkedGraph::parse(std::string_view text) {
  int genus = -1;
  std::vector<std::string> vertices;
  int vertices_line = 0;
  std::string base_name;
  int base_line = 0;
  struct RawEdge {
    std::string name, tail, head, marking;
    bool tree;
    int line;
  };
  std::vector<RawEdge> raw;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("genus:", 0) == 0) {
      const auto toks = split_ws(line.substr(6));
      if (toks.size() != 1) throw ParseError(line_no, "expected 'genus: N'");
      try {
        std::size_t used = 0;
        genus = std::stoi(toks[0], &used);
        if (used != toks[0].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(line_no, "genus is not an integer");
      }
      if (genus < 1 || genus > 26) throw ParseError(line_no, "genus out of range");
    } else if (line.rfind("vertices:", 0) == 0) {
      vertices = split_ws(line.substr(9));
      vertices_line = line_no;
      if (vertices.empty()) throw ParseError(line_no, "no vertices listed");
    } else if (line.rfind("basepoint:", 0) == 0) {
      const auto toks = split_ws(line.substr(10));
      if (toks.size() != 1) throw ParseError(line_no, "expected 'basepoint: NAME'");
      base_name = toks[0];
      base_line = line_no;
    } else if (line.rfind("edge ", 0) == 0) {
      const auto toks = split_ws(line);
      if (toks.size() != 5) throw ParseError(line_no, "expected 'edge NAME TAIL HEAD tree|marking=WORD'");
      RawEdge e{toks[1], toks[2], toks[3], "", false, line_no};
      if (toks[4] == "tree") {
        e.tree = true;
      } else if (toks[4].rfind("marking=", 0) == 0) {
        e.marking = toks[4].substr(8);
      } else {
        throw ParseError(line_no, "edge kind must be 'tree' or 'marking=WORD'");
      }
      raw.push_back(std::move(e));
    } else {
      throw ParseError(line_no, "unrecognised line '" + std::string(line) + "'");
    }
  }
  if (genus < 0) throw ParseError(line_no, "missing 'genus:' line");
  if (vertices.empty()) throw ParseError(line_no, "missing 'vertices:' line");
  if (base_name.empty()) throw ParseError(line_no, "missing 'basepoint:' line");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], static_cast<int>(i)).second) {
      throw ParseError(vertices_line, "duplicate vertex " + vertices[i]);
    }
  }
  auto lookup = [&](const std::string& name, int line) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line, "unknown vertex " + name);
    return it->second;
  };
  std::vector<GraphEdge> edges;
  std::map<std::string, int> edge_names;
  for (const auto& r : raw) {
    if (!edge_names.emplace(r.name, 0).second) throw ParseError(r.line, "duplicate edge " + r.name);
    GraphEdge e;
    e.name = r.name;
    e.tail = lookup(r.tail, r.line);
    e.head = lookup(r.head, r.line);
    e.in_tree = r.tree;
    if (!r.tree) {
      try {
        e.marking = Word::parse(genus, r.marking);
      } catch (const Error& err) {
        throw ParseError(r.line, err.what());
      }
    }
    edges.push_back(std::move(e));
  }
  return build(genus, std::move(vertices), std::move(edges), lookup(base_name, base_line));
}

std::string MarkedGraph::serialize() const {
  std::ostringstream out;
  out << "genus: " << genus_ << "\n";
  out << "vertices:";
  for (const auto& v : vertex_names_) out << ' ' << v;
  out << "\n";
  for (const auto& e : edges_) {
    out << "edge " << e.name << ' ' << vertex_names_[e.tail] << ' ' << vertex_names_[e.head] << ' ';
    if (e.in_tree) {
      out << "tree\n";
    } else {
      out << "marking=" << e.marking.str() << "\n";
    }
  }
  out << "basepoint: " << vertex_names_[basepoint_] << "\n";
  return out.str();
}

void MarkedGraph::check(const TreeVertex& v) const {
  if (v.vertex < 0 || v.vertex >= vertex_count() || v.deck.rank() != genus_) {
    throw Error(ErrorKind::kInvalidCell, "bad vertex coordinate");
  }
}

void MarkedGraph::check(const TreeEdge& e) const {
  if (e.edge < 0 || e.edge >= edge_count() || e.deck.rank() != genus_) {
    throw Error(ErrorKind::kInvalidCell, "bad edge coordinate");
  }
}

TreeVertex MarkedGraph::tail(const TreeEdge& e) const {
  if (!e.forward) return head(e.reversed());
  return TreeVertex{e.deck, edges_[e.edge].tail};
}

TreeVertex MarkedGraph::head(const TreeEdge& e) const {
  if (!e.forward) return tail(e.reversed());
  const GraphEdge& g = edges_[e.edge];
  if (g.in_tree) return TreeVertex{e.deck, g.head};
  return TreeVertex{multiply(e.deck, Word::letter(genus_, g.letter)), g.head};
}

std::array<TreeEdge, 3> MarkedGraph::cover_neighbors(const TreeVertex& v) const {
  check(v);
  std::array<TreeEdge, 3> out;
  int k = 0;
  for (const auto& [e, is_tail] : incidence_[v.vertex]) {
    const GraphEdge& g = edges_[e];
    if (is_tail) {
      out[k++] = TreeEdge{v.deck, e, true};
    } else {
      Word deck = g.in_tree ? v.deck : multiply(v.deck, Word::letter(genus_, -g.letter));
      out[k++] = TreeEdge{std::move(deck), e, false};
    }
  }
  return out;
}

ClopenSet MarkedGraph::own_far_side(const TreeEdge& e) const {
  check(e);
  ClopenSet x = translate(e.deck, own_far_[e.edge]);
  return e.forward ? x : complement(x);
}

ClopenSet MarkedGraph::far_side(const TreeEdge& e) const {
  check(e);
  ClopenSet x = translate(marking_.apply(e.deck), std_far_[e.edge]);
  return e.forward ? x : complement(x);
}

Bipartition MarkedGraph::half_space(const TreeEdge& e) const {
  Bipartition b = Bipartition::from_plus(far_side(e.forward ? e : e.reversed()));
  return e.forward ? b : b.reversed();
}

VertexTripartition MarkedGraph::vertex_tripartition(const TreeVertex& v) const {
  VertexTripartition t;
  t.edges = cover_neighbors(v);
  for (int i = 0; i < 3; ++i) t.parts[i] = far_side(t.edges[i]);
  return t;
}

TreeVertex translate(const Word& g, const TreeVertex& v) { return TreeVertex{multiply(g, v.deck), v.vertex}; }

TreeEdge translate(const Word& g, const TreeEdge& e) {
  return TreeEdge{multiply(g, e.deck), e.edge, e.forward};
}

OrbitCell orbit_normalize(const TreeVertex& v) { return OrbitCell{v.vertex, v.deck}; }
OrbitCell orbit_normalize(const TreeEdge& e) { return OrbitCell{e.edge, e.deck}; }

std::string describe(const MarkedGraph& g, const TreeEdge& e) {
  return g.edge(e.edge).name + (e.forward ? "" : "'") + "@" + e.deck.str();
}

std::string describe(const MarkedGraph& g, const TreeVertex& v) {
  return g.vertex_names().at(v.vertex) + "@" + v.deck.str();
}

const Bipartition& HalfSpaceCache::forward(const Word& deck, int edge) {
  std::string key = deck.code();
  key.push_back('#');
  key += std::to_string(edge);
  auto it = map_.find(key);
  if (it != map_.end()) return it->second;
  Bipartition b = Bipartition::from_plus(graph_->far_side(TreeEdge{deck, edge, true}));
  return map_.emplace(std::move(key), std::move(b)).first->second;
}

}  // namespace sqcore
