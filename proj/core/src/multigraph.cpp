#include "sqcore/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sqcore/marked_graph.hpp"

namespace sqcore {

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(vertices, 0);
  for (const auto& [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

bool Multigraph::connected() const {
  if (vertices == 0) return true;
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = vertices;
  for (const auto& [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --parts;
    }
  }
  return parts == 1;
}

Multigraph to_multigraph(const MarkedGraph& g) {
  Multigraph m;
  m.vertices = g.vertex_count();
  m.vertex_labels = g.vertex_names();
  for (const auto& e : g.edges()) {
    m.edges.emplace_back(e.tail, e.head);
    m.edge_labels.push_back(e.name);
  }
  return m;
}

namespace {

using Counts = std::vector<std::vector<int>>;

Counts multiplicities(const Multigraph& g) {
  Counts c(g.vertices, std::vector<int>(g.vertices, 0));
  for (const auto& [a, b] : g.edges) {
    ++c[a][b];
    if (a != b) ++c[b][a];
  }
  return c;
}

bool extend(const Counts& ca, const Counts& cb, const std::vector<int>& da, const std::vector<int>& db,
            const std::vector<int>& order, std::size_t k, std::vector<int>& map, std::vector<bool>& used) {
  if (k == order.size()) return true;
  const int v = order[k];
  for (int w = 0; w < static_cast<int>(cb.size()); ++w) {
    if (used[w] || da[v] != db[w] || ca[v][v] != cb[w][w]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = ca[v][order[i]] == cb[w][map[order[i]]];
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend(ca, cb, da, db, order, k + 1, map, used)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Multigraph& a, const Multigraph& b) {
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return std::nullopt;
  const auto da = a.degrees(), db = b.degrees();
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  const Counts ca = multiplicities(a), cb = multiplicities(b);
  // Breadth-first order keeps each new vertex adjacent to mapped ones.
  std::vector<int> order;
  std::vector<bool> placed(a.vertices, false);
  for (int s = 0; s < a.vertices; ++s) {
    if (placed[s]) continue;
    placed[s] = true;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      for (int w = 0; w < a.vertices; ++w) {
        if (!placed[w] && ca[order[i]][w] > 0) {
          placed[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  std::vector<int> map(a.vertices, -1);
  std::vector<bool> used(b.vertices, false);
  if (!extend(ca, cb, da, db, order, 0, map, used)) return std::nullopt;
  return map;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string export_dot(const Multigraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << dot_quote(name) << " {\n";
  for (int v = 0; v < g.vertices; ++v) {
    out << "  n" << v;
    if (v < static_cast<int>(g.vertex_labels.size())) out << " [label=" << dot_quote(g.vertex_labels[v]) << "]";
    out << ";\n";
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    out << "  n" << g.edges[e].first << " -- n" << g.edges[e].second;
    if (e < g.edge_labels.size()) out << " [label=" << dot_quote(g.edge_labels[e]) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sqcore
