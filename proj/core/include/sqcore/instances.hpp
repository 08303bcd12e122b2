#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sqcore/marked_graph.hpp"

namespace sqcore {

// Theta graph u, w with tree edge t and non-tree edges x, y (both u -> w).
MarkedGraph theta_graph(const Word& x_marking, const Word& y_marking);
// x -> a, y -> b.
MarkedGraph std2a();
// x -> a, y -> ab.
MarkedGraph std2b();
// x -> aba, y -> BA. Paired with std2a() it shares no partition.
MarkedGraph std2c();

// Ring of 2g-2 vertices with chords i <-> i+g-1; the spanning tree is the
// ring path, and the non-tree edges are the closing ring edge followed by
// the chords. For g = 2 this is a theta graph.
MarkedGraph ring_graph(int genus, const std::vector<Word>& markings);
MarkedGraph ring_graph(int genus);  // identity marking

// The same graph with every marking word conjugated by w.
MarkedGraph conjugated(const MarkedGraph& g, const Word& w);

// Uniform draw in [0, n) by rejection, so the stream of draws is the same
// on every standard library (std::uniform_int_distribution is not).
int draw_below(std::mt19937_64& rng, int n);

struct RandomInstance {
  MarkedGraph t1;
  MarkedGraph t2;
  int attempts = 1;  // draws needed before the pair satisfied the hypothesis
};

// T1 = ring graph with identity marking; T2 = same graph with markings
// twisted by `moves` random transvections. With moves >= 1 the draw is
// repeated (from the same stream) until no partition is shared; after 256
// draws the last witness is thrown as HypothesisViolated. Fewer than three
// moves rarely get there.
RandomInstance random_instance(int genus, std::uint64_t seed, int moves);

}  // namespace sqcore
