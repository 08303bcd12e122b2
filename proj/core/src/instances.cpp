#include "sqcore/instances.hpp"

#include "sqcore/core_builder.hpp"
#include "sqcore/errors.hpp"

namespace sqcore {

MarkedGraph theta_graph(const Word& x_marking, const Word& y_marking) {
  std::vector<GraphEdge> edges(3);
  edges[0] = GraphEdge{"t", 0, 1, true, Word(2), 0};
  edges[1] = GraphEdge{"x", 0, 1, false, x_marking, 0};
  edges[2] = GraphEdge{"y", 0, 1, false, y_marking, 0};
  return MarkedGraph::build(2, {"u", "w"}, std::move(edges), 0);
}

MarkedGraph std2a() { return theta_graph(Word::parse(2, "a"), Word::parse(2, "b")); }
MarkedGraph std2b() { return theta_graph(Word::parse(2, "a"), Word::parse(2, "ab")); }
MarkedGraph std2c() { return theta_graph(Word::parse(2, "aba"), Word::parse(2, "BA")); }

MarkedGraph ring_graph(int genus, const std::vector<Word>& markings) {
  if (genus < 2) throw Error(ErrorKind::kWrongCellCounts, "genus must be at least 2");
  if (static_cast<int>(markings.size()) != genus) throw Error(ErrorKind::kRankMismatch, "need one marking per non-tree edge");
  const int n = 2 * genus - 2;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<GraphEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(GraphEdge{"r" + std::to_string(i), i, i + 1, true, Word(genus), 0});
  edges.push_back(GraphEdge{"r" + std::to_string(n - 1), n - 1, 0, false, markings[0], 0});
  for (int i = 0; i + 1 < genus; ++i) {
    edges.push_back(GraphEdge{"c" + std::to_string(i), i, i + genus - 1, false, markings[i + 1], 0});
  }
  return MarkedGraph::build(genus, std::move(names), std::move(edges), 0);
}

MarkedGraph ring_graph(int genus) {
  std::vector<Word> m;
  for (int i = 1; i <= genus; ++i) m.push_back(Word::letter(genus, i));
  return ring_graph(genus, m);
}

MarkedGraph conjugated(const MarkedGraph& g, const Word& w) {
  std::vector<GraphEdge> edges = g.edges();
  for (auto& e : edges) {
    if (!e.in_tree) e.marking = multiply(w, e.marking, w.inverse());
  }
  return MarkedGraph::build(g.genus(), g.vertex_names(), std::move(edges), g.basepoint());
}

int draw_below(std::mt19937_64& rng, int n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<int>(x % bound);
}

RandomInstance random_instance(int genus, std::uint64_t seed, int moves) {
  if (moves < 0) throw Error(ErrorKind::kParse, "move count must be non-negative");
  std::mt19937_64 rng(seed);
  RandomInstance inst;
  inst.t1 = ring_graph(genus);
  constexpr int kMaxAttempts = 256;
  for (int attempt = 1;; ++attempt) {
    std::vector<Word> t;
    for (int i = 1; i <= genus; ++i) t.push_back(Word::letter(genus, i));
    int last_i = -1, last_j = -1, last_e = 0;
    bool last_right = false;
    for (int m = 0; m < moves; ++m) {
      int i, j, e;
      bool right;
      do {
        i = draw_below(rng, genus);
        j = draw_below(rng, genus - 1);
        if (j >= i) ++j;
        e = draw_below(rng, 2) ? 1 : -1;
        right = draw_below(rng, 2) == 1;
      } while (i == last_i && j == last_j && right == last_right && e == -last_e);
      // Nielsen move t_i <- t_i t_j^e (or t_j^e t_i).
      const Word tj = e > 0 ? t[j] : t[j].inverse();
      t[i] = right ? multiply(t[i], tj) : multiply(tj, t[i]);
      last_i = i;
      last_j = j;
      last_e = e;
      last_right = right;
    }
    inst.t2 = ring_graph(genus, t);
    inst.attempts = attempt;
    if (moves == 0) return inst;
    auto w = check_hypothesis(inst.t1, inst.t2);
    if (!w) return inst;
    if (attempt == kMaxAttempts) throw HypothesisViolated(std::move(*w));
  }
}

}  // namespace sqcore
