#include <sl2w/diagrams.hpp>
#include <sl2w/graphs.hpp>

#include <doctest.h>

#include <random>
#include <set>

using namespace sl2w;

namespace {

// random share on n chords, uniform over endpoint placements
Share random_share(std::mt19937& rng, int n) {
  int slots = 2 * n;
  std::vector<int> perm(static_cast<size_t>(slots));
  for (int i = 0; i < slots; ++i) perm[size_t(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  int split = int(rng() % unsigned(slots + 1));
  std::vector<int> flat(static_cast<size_t>(slots));
  for (int c = 0; c < n; ++c) {
    flat[size_t(perm[size_t(2 * c)])] = c + 1;
    flat[size_t(perm[size_t(2 * c + 1)])] = c + 1;
  }
  Share s;
  s.strand1.assign(flat.begin(), flat.begin() + split);
  s.strand2.assign(flat.begin() + split, flat.end());
  return normalize_labels(s);
}

}  // namespace

TEST_CASE("parsing") {
  ChordDiagram d = ChordDiagram::parse("1 2 1 2");
  CHECK(d.chords() == 2);
  CHECK(intersection_graph(d).edge(0, 1));

  Share s = Share::parse("1 2 3 | 2 3 1");
  CHECK(s.chords() == 3);
  CHECK(s.arch_free());

  Share t = Share::parse("1 1 2 | 2");
  CHECK(t.chords() == 2);
  CHECK_FALSE(t.arch_free());

  CHECK_THROWS_AS(ChordDiagram::parse("1 2 1"), InputError);
  CHECK_THROWS_AS(Share::parse("1 2 1 2"), InputError);  // missing |
  CHECK_THROWS_AS(ChordDiagram::parse("1 x 1"), InputError);
}

TEST_CASE("intersection graphs") {
  SimpleGraph path = intersection_graph(ChordDiagram::parse("1 2 1 3 2 3"));
  CHECK(path.edge_count() == 2);
  CHECK(path.edge(0, 1));
  CHECK(path.edge(1, 2));

  SimpleGraph triangle = intersection_graph(ChordDiagram::parse("1 2 3 1 2 3"));
  CHECK(triangle.edge_count() == 3);

  TwoColoredGraph tc = two_colored_graph(Share::parse("1 2 3 | 2 3 1"));
  CHECK(tc.color == std::vector<ChordColor>(3, ChordColor::Black));
  CHECK(tc.graph.edge(0, 1));
  CHECK(tc.graph.edge(0, 2));
  CHECK_FALSE(tc.graph.edge(1, 2));
}

TEST_CASE("arch and bridge crossing rules") {
  // arch over one bridge end
  TwoColoredGraph tc = two_colored_graph(Share::parse("1 2 1 | 2"));
  CHECK(tc.color[0] == ChordColor::White);
  CHECK(tc.color[1] == ChordColor::Black);
  CHECK(tc.graph.edge(0, 1));

  // nested arches do not intersect
  TwoColoredGraph nested = two_colored_graph(Share::parse("1 2 2 1 |"));
  CHECK(nested.graph.edge_count() == 0);

  // alternating arches do
  TwoColoredGraph alt = two_colored_graph(Share::parse("1 2 1 2 |"));
  CHECK(alt.graph.edge_count() == 1);

  // arches on different strands never intersect
  TwoColoredGraph split = two_colored_graph(Share::parse("1 1 | 2 2"));
  CHECK(split.graph.edge_count() == 0);
}

TEST_CASE("products") {
  Share bridge1 = Share::parse("1 | 1");

  Share d = dot(bridge1, bridge1);
  CHECK(d.text() == "1 2 | 1 2");
  TwoColoredGraph dg = two_colored_graph(d);
  CHECK(dg.graph.edge_count() == 0);  // parallel bridges

  Share x = cross(bridge1, bridge1);
  TwoColoredGraph xg = two_colored_graph(x);
  CHECK(xg.graph.edge_count() == 1);  // crossing bridges

  ChordDiagram j = join(bridge1, bridge1);
  CHECK(canonical_diagram(j) == canonical_diagram(ChordDiagram::parse("1 2 1 2")));
}

TEST_CASE("closure and the flipped-share graph") {
  // the closure complements bridge adjacencies: its intersection graph is the
  // colorless graph of the strand-reversed share
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    Share s = random_share(rng, 1 + int(rng() % 5));
    SimpleGraph closure_graph = intersection_graph(closure(s));
    SimpleGraph flipped = two_colored_graph(reverse_strand(s)).graph;
    CHECK(graph_iso(closure_graph, flipped));
  }

  // crossing bridges close to a nested (edgeless) diagram
  CHECK(intersection_graph(closure(Share::parse("1 2 | 2 1"))).edge_count() == 0);
  // parallel bridges close to the crossing diagram
  CHECK(intersection_graph(closure(Share::parse("1 2 | 1 2"))).edge_count() == 1);
}

TEST_CASE("reverse_strand involution and complement on arch-free shares") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Share s = random_share(rng, 1 + int(rng() % 5));
    CHECK(reverse_strand(reverse_strand(s)) == s);
  }
  // arch-free: reversing complements the (all black) graph
  Share s = Share::parse("1 2 3 4 | 2 4 1 3");
  SimpleGraph g = two_colored_graph(s).graph;
  SimpleGraph rg = two_colored_graph(reverse_strand(s)).graph;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(g.edge(u, v) != rg.edge(u, v));
}

TEST_CASE("canonical forms and enumeration") {
  CHECK(enumerate_diagrams(0).size() == 1);
  CHECK(enumerate_diagrams(1).size() == 1);
  CHECK(enumerate_diagrams(2).size() == 2);
  CHECK(enumerate_diagrams(3).size() == 5);
  CHECK(enumerate_diagrams(4).size() == 18);

  CHECK_THROWS_AS(enumerate_diagrams(9), BudgetError);

  SUBCASE("canonical form is rotation invariant") {
    std::mt19937 rng(5);
    for (const auto& d : enumerate_diagrams(4)) {
      std::vector<int> w = d.word;
      size_t r = rng() % w.size();
      std::vector<int> rot(w.begin() + long(r), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + long(r));
      CHECK(canonical_diagram(ChordDiagram{rot}) == canonical_diagram(d));
    }
  }

  SUBCASE("graph text round trip") {
    SimpleGraph g = SimpleGraph::parse("5: 1-2,1-3,2-3,2-4,3-5");
    CHECK(g.edge_count() == 5);
    CHECK(SimpleGraph::parse(g.text()) == g);
    CHECK_THROWS_AS(SimpleGraph::parse("3: 1-4"), InputError);
  }
}
