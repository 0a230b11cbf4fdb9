// Graph-side operations: canonical forms at desk scale, complement and join,
// realization of graphs by shares and chord diagrams, local complementation
// with the circle-graph obstruction scan, and the graph-to-series pipeline.
#pragma once

#include <sl2w/diagrams.hpp>
#include <sl2w/genfun.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace sl2w {

struct NotRealizableError : InputError {
  using InputError::InputError;
};

// Lexicographically least packed upper-triangle adjacency over all vertex
// permutations. Brute force, n <= 8.
uint64_t graph_canon(const SimpleGraph& g);
bool graph_iso(const SimpleGraph& a, const SimpleGraph& b);

SimpleGraph complement(const SimpleGraph& g);
SimpleGraph join_graphs(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph join_discrete(const SimpleGraph& g, int n);
SimpleGraph discrete_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
// Triangle 1-2-3 with pendants 4 on 2 and 5 on 3. Self-complementary.
SimpleGraph bull_graph();

// Arch-free share whose two-colored intersection graph (all black) is
// isomorphic to g: bridge crossings are permutation inversions. Returns the
// first match in lexicographic permutation order, or nullopt if g is not a
// permutation graph.
std::optional<Share> realize_permutation(const SimpleGraph& g, int max_vertices = 8);

// Chord diagram whose intersection graph is isomorphic to g, searching all
// (2n-1)!! pairings, or nullopt if g is not a circle graph.
std::optional<ChordDiagram> realize_circle(const SimpleGraph& g, int max_vertices = 8);

// Replaces the subgraph induced by the neighborhood of v by its complement.
SimpleGraph local_complement(const SimpleGraph& g, int v);

// Bouchet's three circle-graph obstructions: W5, BW3, W7.
std::array<SimpleGraph, 3> circle_obstructions();

bool contains_subgraph(const SimpleGraph& g, const SimpleGraph& h, bool induced);

enum class BouchetVerdict : uint8_t { Obstructed, Clear, Inconclusive };

struct BouchetReport {
  BouchetVerdict verdict = BouchetVerdict::Inconclusive;
  // Which containment reading fired. The subgraph reading follows the
  // obstruction statement literally; the induced reading is the usual one.
  bool subgraph_hit = false;
  bool induced_hit = false;
  int obstruction = -1;  // index into circle_obstructions() for the first hit
  size_t orbit_explored = 0;
  std::string witness;  // graph text of the orbit member that contains it
};

// Breadth-first scan of the local-equivalence orbit, up to `budget` distinct
// members.
BouchetReport bouchet_scan(const SimpleGraph& g, size_t budget = 2000);

// All permutation graphs with exactly n vertices, one canonical
// representative each, deterministic order.
std::vector<SimpleGraph> permutation_graphs(int n);

// The pipeline of the join series: realize g by an arch-free share, reverse
// one strand (the closure complements the black part, so the reversed share
// is the one whose joins with y^n realize (g, n)), reduce, decompose in the
// eigenbasis. Throws NotRealizableError for non-permutation graphs.
RSeries graph_rseries(ShareSpace& space, const SimpleGraph& g, int max_vertices = 8);

// Realizing diagram of the join (g, n), built from the arch-free share of g.
ChordDiagram join_with_discrete_diagram(const Share& arch_free_share_of_g, int n);

struct DualityTerm {
  int k = 0;
  PolyC r_graph;
  PolyC r_complement;
  bool ok = false;
};

struct DualityReport {
  bool realizable = false;
  bool pass = false;
  int vertices = 0;
  std::vector<DualityTerm> terms;
};

// Checks r_k(complement) == (-1)^{n-k} r_k(g) term by term, computing the
// complement side independently through the reversed share.
DualityReport verify_duality(ShareSpace& space, const SimpleGraph& g, int max_vertices = 8);

}  // namespace sl2w
