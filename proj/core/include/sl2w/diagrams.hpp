// Chord diagrams on a circle and on two oriented strands (shares), their
// intersection graphs, products, closure and enumeration.
//
// Conventions:
//  - A diagram is a double-occurrence word read counterclockwise.
//  - A share is a pair of strand words, each read along its strand's
//    orientation. A chord with both ends on one strand is an arch, otherwise
//    a bridge.
//  - Two bridges intersect iff their ends appear in opposite orders on the
//    two strands (permutation inversion).
//  - closure(s) glues the strands so that strand 2 follows strand 1 around
//    the circle: the word of the closure is strand1 + strand2.
#pragma once

#include <sl2w/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sl2w {

struct SimpleGraph {
  int n = 0;
  std::vector<uint32_t> adj;  // adjacency bitmask per vertex, vertices 0-based

  static SimpleGraph empty(int n);
  static SimpleGraph parse(std::string_view text);  // "n: u-v,u-v" (1-based)
  std::string text() const;

  bool edge(int u, int v) const { return (adj[size_t(u)] >> unsigned(v)) & 1u; }
  void set_edge(int u, int v);
  int edge_count() const;
  int degree(int v) const;

  bool operator==(const SimpleGraph&) const = default;
};

enum class ChordColor : uint8_t { White, Black };  // White = arch, Black = bridge

struct TwoColoredGraph {
  SimpleGraph graph;
  std::vector<ChordColor> color;
};

struct ChordDiagram {
  std::vector<int> word;  // labels 1..n, each exactly twice

  static ChordDiagram parse(std::string_view text);
  std::string text() const;
  int chords() const { return int(word.size()) / 2; }
  bool operator==(const ChordDiagram&) const = default;
};

struct Share {
  std::vector<int> strand1;
  std::vector<int> strand2;

  static Share parse(std::string_view text);  // "1 2 | 2 1"; a strand may be empty
  std::string text() const;
  int chords() const { return int(strand1.size() + strand2.size()) / 2; }
  bool arch_free() const;
  bool operator==(const Share&) const = default;
};

// Relabels chords to 1..n in order of first occurrence.
ChordDiagram normalize_labels(const ChordDiagram& d);
Share normalize_labels(const Share& s);

SimpleGraph intersection_graph(const ChordDiagram& d);
TwoColoredGraph two_colored_graph(const Share& s);

ChordDiagram closure(const Share& s);
// Strandwise concatenation; chords of h are relabeled past those of i.
Share dot(const Share& i, const Share& h);
// Interleaves so that every bridge of i crosses every bridge of h.
Share cross(const Share& i, const Share& h);
// The chord diagram (i, h): closure of the dot product.
ChordDiagram join(const Share& i, const Share& h);
// Reverses strand 1. No sign here; the sign lives in the involution on the
// share algebra.
Share reverse_strand(const Share& s);

// Lexicographically least label-normalized rotation.
std::vector<int> canonical_diagram(const ChordDiagram& d);

// One representative per rotation class, sorted. The number of raw pairings
// visited is (2n-1)!!.
std::vector<ChordDiagram> enumerate_diagrams(int n, int max_chords = 8);

// The m pairwise crossing bridges ("1..m | m..1") and the m parallel ones.
Share all_crossing_share(int m);
Share parallel_share(int m);
// The all-crossing diagram "1..m 1..m" with complete intersection graph.
ChordDiagram complete_graph_diagram(int m);

}  // namespace sl2w
