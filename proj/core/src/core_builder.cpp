#include "sqcore/core_builder.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace sqcore {

namespace {

constexpr int kWalkCap = 200000;
constexpr std::size_t kSearchCap = 2000000;

std::string edge_key(const TreeEdge& e) {
  std::string k = e.deck.code();
  k.push_back('#');
  k += std::to_string(e.edge);
  return k;
}

TreeEdge forward_of(const TreeEdge& e) { return TreeEdge{e.deck, e.edge, true}; }

bool edge_less(const TreeEdge& a, const TreeEdge& b) {
  if (a.deck != b.deck) return a.deck < b.deck;
  return a.edge < b.edge;
}

// The outward edge at v whose far side contains the end.
TreeEdge step_toward(HalfSpaceCache& cache, const TreeVertex& v, const RationalEnd& xi) {
  for (const auto& e : cache.graph().cover_neighbors(v)) {
    if (contains_end(cache.plus(e), xi)) return e;
  }
  throw std::logic_error("no edge at a vertex points toward the end");
}

[[noreturn]] void walk_exhausted() {
  throw Error(ErrorKind::kInternalBoundExceeded, "tree walk exceeded its step cap");
}

// Edges shared by the rays from the base vertex toward two ends.
std::vector<TreeEdge> common_ray(HalfSpaceCache& cache, const RationalEnd& x, const RationalEnd& y) {
  std::vector<TreeEdge> out;
  TreeVertex v = cache.graph().base_vertex();
  for (int step = 0; step < kWalkCap; ++step) {
    const TreeEdge ex = step_toward(cache, v, x);
    const TreeEdge ey = step_toward(cache, v, y);
    if (!(ex == ey)) return out;
    out.push_back(ex);
    v = cache.graph().head(ex);
  }
  walk_exhausted();
}

}  // namespace

RationalEnd sample_end(const ClopenSet& x, int variant) {
  if (x.is_empty()) throw std::logic_error("cannot sample an end from the empty set");
  const Word p = x.prefixes().front();
  const int rank = x.rank();
  int seen = 0;
  for (int i = 0; i < 2 * rank; ++i) {
    const Letter l = i < rank ? i + 1 : -(i - rank + 1);
    if (!p.empty() && p.back() == -l) continue;
    if (seen++ == variant) return RationalEnd::make(p, Word::letter(rank, l));
  }
  throw std::logic_error("not enough admissible letters to sample an end");
}

CoreContext::CoreContext(const MarkedGraph& t1, const MarkedGraph& t2)
    : t1_(&t1), t2_(&t2), cache1_(t1), cache2_(t2) {
  if (t1.genus() != t2.genus()) {
    throw Error(ErrorKind::kRankMismatch, "trees of genus " + std::to_string(t1.genus()) + " and " +
                                              std::to_string(t2.genus()));
  }
  psi_ = compose(t2.marking().inverse(), t1.marking());
}

void CoreContext::violated(const TreeEdge& e1, const TreeEdge& e2) const {
  throw HypothesisViolated(HypothesisWitness{
      e1, e2, "t1 edge " + describe(*t1_, e1) + " and t2 edge " + describe(*t2_, e2) + " induce the same partition"});
}

bool CoreContext::edges_non_nested(const TreeEdge& e1, const TreeEdge& e2) {
  return non_nested(cache1_.forward(e1), cache2_.forward(e2));
}

TreeEdge CoreContext::find_seed(const TreeEdge& e1) {
  const ClopenSet& ep = cache1_.plus(e1);
  const Bipartition& eb = cache1_.forward(e1);
  const ClopenSet& em = e1.forward ? eb.minus : eb.plus;
  const RationalEnd xi_plus = sample_end(ep);
  const RationalEnd xi_minus = sample_end(em);

  // Walk toward xi_plus until the edge's far side sits inside e+.
  TreeVertex v = t2_->base_vertex();
  TreeEdge a;
  for (int step = 0;; ++step) {
    if (step == kWalkCap) walk_exhausted();
    a = step_toward(cache2_, v, xi_plus);
    const ClopenSet& ap = cache2_.plus(a);
    if (ap == ep || ap == em) violated(e1, a);
    if (is_subset(ap, ep)) break;
    v = t2_->head(a);
  }
  // Walk from a toward xi_minus; each edge b is oriented away from xi_minus,
  // so far sides grow. Stop at the first b with e+ inside b+.
  TreeEdge c = a;
  v = t2_->tail(a);
  TreeEdge toward;
  for (int step = 0;; ++step) {
    if (step == kWalkCap) walk_exhausted();
    toward = step_toward(cache2_, v, xi_minus);
    const TreeEdge b = toward.reversed();
    const ClopenSet& bp = cache2_.plus(b);
    if (bp == ep || bp == em) violated(e1, b);
    if (is_subset(ep, bp)) break;
    c = b;
    v = t2_->head(toward);
  }
  TreeEdge candidate = c;
  if (is_subset(cache2_.plus(c), ep)) {
    // c and b meet at v; take the third edge there.
    for (const auto& d : t2_->cover_neighbors(v)) {
      if (!d.same_edge(c) && !d.same_edge(toward)) {
        candidate = d;
        break;
      }
    }
  }
  if (edges_non_nested(e1, candidate)) return forward_of(candidate);
  ++fallback_seeds_;
  return seed_by_search(e1);
}

TreeEdge CoreContext::seed_by_search(const TreeEdge& e1) {
  std::unordered_set<std::string> seen;
  std::deque<TreeVertex> queue{t2_->base_vertex()};
  std::unordered_set<std::string> seen_v;
  while (!queue.empty()) {
    const TreeVertex v = queue.front();
    queue.pop_front();
    for (const auto& e : t2_->cover_neighbors(v)) {
      const TreeEdge f = forward_of(e);
      if (!seen.insert(edge_key(f)).second) continue;
      if (seen.size() > kSearchCap) {
        throw Error(ErrorKind::kInternalBoundExceeded, "seed search found no crossing edge");
      }
      if (edges_non_nested(e1, f)) return f;
      queue.push_back(t2_->head(e));
    }
  }
  throw std::logic_error("seed search ran out of edges");
}

std::vector<TreeEdge> CoreContext::fiber(const TreeEdge& e1) {
  const TreeEdge seed = find_seed(e1);
  std::vector<TreeEdge> out{seed};
  std::unordered_set<std::string> seen{edge_key(seed)};
  std::deque<TreeEdge> queue{seed};
  while (!queue.empty()) {
    const TreeEdge f = queue.front();
    queue.pop_front();
    for (const TreeVertex& w : {t2_->tail(f), t2_->head(f)}) {
      for (const auto& g : t2_->cover_neighbors(w)) {
        const TreeEdge h = forward_of(g);
        if (!seen.insert(edge_key(h)).second) continue;
        if (seen.size() > kSearchCap) throw Error(ErrorKind::kInternalBoundExceeded, "fiber too large");
        if (edges_non_nested(e1, h)) {
          out.push_back(h);
          queue.push_back(h);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), edge_less);
  return out;
}

std::vector<TreeEdge> CoreContext::vertex_fiber(const TreeVertex& v1) {
  const auto around = t1_->cover_neighbors(v1);
  std::array<const ClopenSet*, 3> parts{};
  for (int i = 0; i < 3; ++i) parts[i] = &cache1_.plus(around[i]);
  auto member = [&](const TreeEdge& f) {
    const Bipartition& b = cache2_.forward(f);
    for (const ClopenSet* d : parts) {
      if (is_subset(b.plus, *d) || is_subset(b.minus, *d)) return false;
    }
    return true;
  };
  const TreeEdge seed = find_seed(around[0]);
  if (!member(seed)) throw std::logic_error("edge fiber seed is outside the vertex fiber");
  std::vector<TreeEdge> out{seed};
  std::unordered_set<std::string> seen{edge_key(seed)};
  std::deque<TreeEdge> queue{seed};
  while (!queue.empty()) {
    const TreeEdge f = queue.front();
    queue.pop_front();
    for (const TreeVertex& w : {t2_->tail(f), t2_->head(f)}) {
      for (const auto& g : t2_->cover_neighbors(w)) {
        const TreeEdge h = forward_of(g);
        if (!seen.insert(edge_key(h)).second) continue;
        if (seen.size() > kSearchCap) throw Error(ErrorKind::kInternalBoundExceeded, "vertex fiber too large");
        if (member(h)) {
          out.push_back(h);
          queue.push_back(h);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), edge_less);
  return out;
}

std::optional<HypothesisWitness> check_hypothesis(const MarkedGraph& t1, const MarkedGraph& t2) {
  CoreContext ctx(t1, t2);
  for (int e = 0; e < t1.edge_count(); ++e) {
    const TreeEdge lift{Word(t1.genus()), e, true};
    const Bipartition& p = ctx.cache1().forward(lift);
    // Any edge with the same partition separates the two sampled ends of
    // e+ from the two sampled ends of e-, so it lies on both rays toward
    // one of these pairs before they diverge.
    std::vector<TreeEdge> candidates = common_ray(ctx.cache2(), sample_end(p.plus, 0), sample_end(p.plus, 1));
    const auto more = common_ray(ctx.cache2(), sample_end(p.minus, 0), sample_end(p.minus, 1));
    candidates.insert(candidates.end(), more.begin(), more.end());
    for (const auto& f : candidates) {
      if (ctx.cache2().forward(f).same_partition(p)) {
        const TreeEdge f2 = forward_of(f);
        return HypothesisWitness{lift, f2,
                                 "t1 edge " + describe(t1, lift) + " and t2 edge " + describe(t2, f2) +
                                     " induce the same partition"};
      }
    }
  }
  return std::nullopt;
}

namespace {

struct CellKey {
  int a;
  std::string deck;  // word code in second-tree letters
  int b;
  bool operator<(const CellKey& o) const {
    if (a != o.a) return a < o.a;
    if (deck != o.deck) return shortlex_less(deck, o.deck);
    return b < o.b;
  }
};

class Numbering {
 public:
  void add(const CellKey& k) { ids_.emplace(k, -1); }
  void finalize() {
    int i = 0;
    for (auto& [k, id] : ids_) id = i++;
  }
  int id(const CellKey& k) const { return ids_.at(k); }
  const std::map<CellKey, int>& all() const { return ids_; }

 private:
  std::map<CellKey, int> ids_;
};

}  // namespace

CoreResult build_core(const MarkedGraph& t1, const MarkedGraph& t2, const BuildOptions& opts) {
  if (t1.genus() != t2.genus()) {
    throw Error(ErrorKind::kRankMismatch, "trees of genus " + std::to_string(t1.genus()) + " and " +
                                              std::to_string(t2.genus()));
  }
  if (auto w = check_hypothesis(t1, t2)) throw HypothesisViolated(*w);

  const int n = t1.edge_count();
  const int g = t1.genus();
  CoreResult result;
  result.fibers.resize(n);
  std::vector<std::exception_ptr> errors(n);
  std::vector<int> fallbacks(n, 0);
  std::atomic<int> next{0};
  auto worker = [&] {
    CoreContext ctx(t1, t2);
    for (int e = next++; e < n; e = next++) {
      const int before = ctx.fallback_seeds();
      try {
        result.fibers[e] = ctx.fiber(TreeEdge{Word(g), e, true});
      } catch (...) {
        errors[e] = std::current_exception();
      }
      fallbacks[e] = ctx.fallback_seeds() - before;
    }
  };
  const int threads = std::max(1, std::min(opts.threads, n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (int e = 0; e < n; ++e) {
    if (errors[e]) std::rethrow_exception(errors[e]);
    result.fallback_seeds += fallbacks[e];
  }

  // Assembly: the first-tree cell is moved to its canonical lift and the
  // leftover deck word acts on the second-tree cell through psi.
  const Automorphism psi = compose(t2.marking().inverse(), t1.marking());
  auto head_deck1 = [&](int e) {
    const GraphEdge& ge = t1.edge(e);
    return ge.in_tree ? Word(g) : Word::letter(g, ge.letter);
  };
  auto head_deck2 = [&](const TreeEdge& f) { return t2.head(f).deck; };

  Numbering verts, black, red, squares;
  struct Raw {
    CellKey sq;
    CellKey black_a, black_b;  // e1 x a2, e1 x b2
    CellKey red_a, red_b;      // a1 x e2, b1 x e2
  };
  std::vector<Raw> raws;
  for (int e = 0; e < n; ++e) {
    const GraphEdge& ge = t1.edge(e);
    const Word shift = psi.apply(head_deck1(e)).inverse();
    for (const auto& f : result.fibers[e]) {
      const GraphEdge& gf = t2.edge(f.edge);
      const Word& h = f.deck;
      const Word hb = head_deck2(f);
      Raw r{CellKey{e, h.code(), f.edge},
            CellKey{e, h.code(), gf.tail},
            CellKey{e, hb.code(), gf.head},
            CellKey{ge.tail, h.code(), f.edge},
            CellKey{ge.head, multiply(shift, h).code(), f.edge}};
      squares.add(r.sq);
      black.add(r.black_a);
      black.add(r.black_b);
      red.add(r.red_a);
      red.add(r.red_b);
      raws.push_back(std::move(r));
    }
  }
  // Every vertex is an endpoint of some edge; collect them from the edges.
  auto black_tail = [&](const CellKey& k) { return CellKey{t1.edge(k.a).tail, k.deck, k.b}; };
  auto black_head = [&](const CellKey& k) {
    const Word shift = psi.apply(head_deck1(k.a)).inverse();
    return CellKey{t1.edge(k.a).head, multiply(shift, Word::from_code(g, k.deck)).code(), k.b};
  };
  auto red_tail = [&](const CellKey& k) { return CellKey{k.a, k.deck, t2.edge(k.b).tail}; };
  auto red_head = [&](const CellKey& k) {
    const TreeVertex w = t2.head(TreeEdge{Word::from_code(g, k.deck), k.b, true});
    return CellKey{k.a, w.deck.code(), w.vertex};
  };
  for (const auto& [k, id] : black.all()) {
    verts.add(black_tail(k));
    verts.add(black_head(k));
  }
  for (const auto& [k, id] : red.all()) {
    verts.add(red_tail(k));
    verts.add(red_head(k));
  }
  verts.finalize();
  black.finalize();
  red.finalize();
  squares.finalize();

  auto deck_text = [&](const std::string& code) { return Word::from_code(g, code).str(); };
  std::vector<std::string> vlabels(verts.all().size());
  for (const auto& [k, id] : verts.all()) {
    vlabels[id] = "t1=" + t1.vertex_names()[k.a] + " t2=" + t2.vertex_names()[k.b] + "@" + deck_text(k.deck);
  }
  const int nb = static_cast<int>(black.all().size());
  std::vector<VEdge> edges(nb + red.all().size());
  for (const auto& [k, id] : black.all()) {
    edges[id] = VEdge{verts.id(black_tail(k)), verts.id(black_head(k)), Color::kBlack,
                      "t1=" + t1.edge(k.a).name + " t2=" + t2.vertex_names()[k.b] + "@" + deck_text(k.deck)};
  }
  for (const auto& [k, id] : red.all()) {
    edges[nb + id] = VEdge{verts.id(red_tail(k)), verts.id(red_head(k)), Color::kRed,
                           "t1=" + t1.vertex_names()[k.a] + " t2=" + t2.edge(k.b).name + "@" + deck_text(k.deck)};
  }
  std::vector<VSquare> sqs(raws.size());
  for (const auto& r : raws) {
    VSquare s;
    s.sides = {Side{black.id(r.black_a), true}, Side{nb + red.id(r.red_b), true},
               Side{black.id(r.black_b), false}, Side{nb + red.id(r.red_a), false}};
    s.label = "t1=" + t1.edge(r.sq.a).name + " t2=" + t2.edge(r.sq.b).name + "@" + deck_text(r.sq.deck);
    sqs[squares.id(r.sq)] = std::move(s);
  }
  result.complex = VHComplex(g, std::move(vlabels), std::move(edges), std::move(sqs));
  return result;
}

VHComplex build_quotient_core(const MarkedGraph& t1, const MarkedGraph& t2, const BuildOptions& opts) {
  return build_core(t1, t2, opts).complex;
}

std::vector<TreeEdge> ball_edges(const MarkedGraph& g, int radius) {
  std::vector<TreeEdge> out;
  if (radius <= 0) return out;
  std::deque<std::pair<TreeVertex, int>> queue{{g.base_vertex(), 0}};
  std::unordered_set<std::string> seen;
  while (!queue.empty()) {
    auto [v, d] = queue.front();
    queue.pop_front();
    if (d == radius) continue;
    for (const auto& e : g.cover_neighbors(v)) {
      const TreeEdge f = forward_of(e);
      if (!seen.insert(edge_key(f)).second) continue;
      out.push_back(f);
      queue.emplace_back(g.head(e), d + 1);
    }
  }
  std::sort(out.begin(), out.end(), edge_less);
  return out;
}

OracleReport run_oracle(const MarkedGraph& t1, const MarkedGraph& t2, const CoreResult& core, int radius) {
  OracleReport rep;
  rep.radius = radius;
  const auto b1 = ball_edges(t1, radius);
  const auto b2 = ball_edges(t2, radius);
  rep.t1_edges = b1.size();
  rep.t2_edges = b2.size();
  if (b1.empty() || b2.empty()) return rep;

  // Direct partitions: own-letter far side pushed through the marking.
  auto direct = [](const MarkedGraph& g, const TreeEdge& e) {
    return Bipartition::from_plus(boundary_image(g.marking(), g.own_far_side(e)));
  };
  std::vector<Bipartition> p1, p2;
  for (const auto& e : b1) p1.push_back(direct(t1, e));
  for (const auto& e : b2) p2.push_back(direct(t2, e));

  const Automorphism psi = compose(t2.marking().inverse(), t1.marking());
  for (std::size_t i = 0; i < b1.size(); ++i) {
    std::unordered_set<std::string> predicted;
    const Word shift = psi.apply(b1[i].deck);
    for (const auto& f : core.fibers.at(b1[i].edge)) {
      predicted.insert(edge_key(translate(shift, f)));
    }
    for (std::size_t j = 0; j < b2.size(); ++j) {
      ++rep.pairs;
      const bool brute = non_nested(p1[i], p2[j]);
      if (brute) ++rep.crossing_pairs;
      if (brute != (predicted.count(edge_key(b2[j])) > 0)) {
        rep.discrepancies.push_back(OracleDiscrepancy{b1[i], b2[j], brute});
      }
    }
  }
  return rep;
}

}  // namespace sqcore
