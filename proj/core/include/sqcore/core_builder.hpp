#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqcore/errors.hpp"
#include "sqcore/marked_graph.hpp"
#include "sqcore/vh_complex.hpp"

namespace sqcore {

// An edge of the first tree and an edge of the second tree that induce the
// same partition of the boundary.
struct HypothesisWitness {
  TreeEdge t1;
  TreeEdge t2;
  std::string text;
};

class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(HypothesisWitness w)
      : Error(ErrorKind::kHypothesisViolated, w.text), witness_(std::move(w)) {}
  const HypothesisWitness& witness() const noexcept { return witness_; }

 private:
  HypothesisWitness witness_;
};

// Per-thread working state for one ordered pair of trees.
class CoreContext {
 public:
  // Throws RankMismatch for graphs of different genus.
  CoreContext(const MarkedGraph& t1, const MarkedGraph& t2);

  const MarkedGraph& t1() const { return *t1_; }
  const MarkedGraph& t2() const { return *t2_; }
  HalfSpaceCache& cache1() { return cache1_; }
  HalfSpaceCache& cache2() { return cache2_; }
  // psi = phi2^-1 o phi1: first-tree deck words to second-tree deck words.
  const Automorphism& transition() const { return psi_; }

  bool edges_non_nested(const TreeEdge& e1, const TreeEdge& e2);
  // A second-tree edge crossing e1, found by replaying the surjectivity
  // argument; falls back to breadth-first search.
  TreeEdge find_seed(const TreeEdge& e1);
  // All second-tree edges crossing e1, forward-oriented, sorted.
  std::vector<TreeEdge> fiber(const TreeEdge& e1);
  // Second-tree edges neither of whose sides lies in one of the three
  // regions cut out by v1.
  std::vector<TreeEdge> vertex_fiber(const TreeVertex& v1);

  int fallback_seeds() const { return fallback_seeds_; }

 private:
  TreeEdge seed_by_search(const TreeEdge& e1);
  [[noreturn]] void violated(const TreeEdge& e1, const TreeEdge& e2) const;

  const MarkedGraph* t1_;
  const MarkedGraph* t2_;
  Automorphism psi_;
  HalfSpaceCache cache1_;
  HalfSpaceCache cache2_;
  int fallback_seeds_ = 0;
};

// Looks for a pair of edges with equal partitions; nullopt if none exists.
std::optional<HypothesisWitness> check_hypothesis(const MarkedGraph& t1, const MarkedGraph& t2);

struct BuildOptions {
  int threads = 1;
};

struct CoreResult {
  VHComplex complex;
  std::vector<std::vector<TreeEdge>> fibers;  // per edge of the first graph
  int fallback_seeds = 0;
};

// Throws HypothesisViolated.
CoreResult build_core(const MarkedGraph& t1, const MarkedGraph& t2, const BuildOptions& opts = {});
VHComplex build_quotient_core(const MarkedGraph& t1, const MarkedGraph& t2, const BuildOptions& opts = {});

// Sample ends: shortest prefix of x followed by the first (variant 0) or
// second (variant 1) admissible letter repeated forever.
RationalEnd sample_end(const ClopenSet& x, int variant = 0);

// Edges of the cover whose endpoints are within distance r of the base vertex.
std::vector<TreeEdge> ball_edges(const MarkedGraph& g, int radius);

struct OracleDiscrepancy {
  TreeEdge t1;
  TreeEdge t2;
  bool brute_force;  // value from direct cylinder algebra
};

struct OracleReport {
  int radius = 0;
  std::size_t t1_edges = 0;
  std::size_t t2_edges = 0;
  std::size_t pairs = 0;
  std::size_t crossing_pairs = 0;
  std::vector<OracleDiscrepancy> discrepancies;
};

// Compares direct nestedness tests on all ball edge pairs with the squares
// predicted by the fibers of a built core.
OracleReport run_oracle(const MarkedGraph& t1, const MarkedGraph& t2, const CoreResult& core, int radius);

}  // namespace sqcore
