#include <sl2w/graphs.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace sl2w {

namespace {

uint64_t pack_upper(const SimpleGraph& g, const std::vector<int>& perm) {
  uint64_t bits = 0;
  int idx = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j, ++idx)
      if (g.edge(perm[size_t(i)], perm[size_t(j)])) bits |= uint64_t(1) << idx;
  return bits;
}

std::vector<int> degree_multiset(const SimpleGraph& g) {
  std::vector<int> d(size_t(g.n));
  for (int v = 0; v < g.n; ++v) d[size_t(v)] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

uint64_t graph_canon(const SimpleGraph& g) {
  if (g.n > 8) throw BudgetError("graph_canon: n > 8");
  std::vector<int> perm(size_t(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t(0);
  do {
    best = std::min(best, pack_upper(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g.n == 0 ? 0 : best;
}

namespace {

bool iso_backtrack(const SimpleGraph& a, const SimpleGraph& b, std::vector<int>& map,
                   std::vector<bool>& used, size_t depth) {
  if (depth == map.size()) return true;
  int u = int(depth);
  for (int v = 0; v < b.n; ++v) {
    if (used[size_t(v)] || a.degree(u) != b.degree(v)) continue;
    bool ok = true;
    for (int w = 0; w < u && ok; ++w)
      if (a.edge(u, w) != b.edge(v, map[size_t(w)])) ok = false;
    if (!ok) continue;
    map[size_t(u)] = v;
    used[size_t(v)] = true;
    if (iso_backtrack(a, b, map, used, depth + 1)) return true;
    used[size_t(v)] = false;
  }
  return false;
}

}  // namespace

bool graph_iso(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  if (degree_multiset(a) != degree_multiset(b)) return false;
  std::vector<int> map(size_t(a.n), -1);
  std::vector<bool> used(size_t(a.n), false);
  return iso_backtrack(a, b, map, used, 0);
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out = SimpleGraph::empty(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!g.edge(u, v)) out.set_edge(u, v);
  return out;
}

SimpleGraph join_graphs(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph out = SimpleGraph::empty(a.n + b.n);
  for (int u = 0; u < a.n; ++u)
    for (int v = u + 1; v < a.n; ++v)
      if (a.edge(u, v)) out.set_edge(u, v);
  for (int u = 0; u < b.n; ++u)
    for (int v = u + 1; v < b.n; ++v)
      if (b.edge(u, v)) out.set_edge(a.n + u, a.n + v);
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < b.n; ++v) out.set_edge(u, a.n + v);
  return out;
}

SimpleGraph join_discrete(const SimpleGraph& g, int n) {
  return join_graphs(g, discrete_graph(n));
}

SimpleGraph discrete_graph(int n) { return SimpleGraph::empty(n); }

SimpleGraph complete_graph(int n) {
  SimpleGraph g = SimpleGraph::empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g = SimpleGraph::empty(n);
  for (int u = 0; u < n; ++u) g.set_edge(u, (u + 1) % n);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g = SimpleGraph::empty(n);
  for (int u = 0; u + 1 < n; ++u) g.set_edge(u, u + 1);
  return g;
}

SimpleGraph bull_graph() {
  SimpleGraph g = SimpleGraph::empty(5);
  g.set_edge(0, 1);
  g.set_edge(0, 2);
  g.set_edge(1, 2);
  g.set_edge(1, 3);
  g.set_edge(2, 4);
  return g;
}

namespace {

SimpleGraph inversion_graph(const std::vector<int>& word) {
  int n = int(word.size());
  SimpleGraph g = SimpleGraph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (word[size_t(i)] > word[size_t(j)]) g.set_edge(word[size_t(i)] - 1, word[size_t(j)] - 1);
  return g;
}

}  // namespace

std::optional<Share> realize_permutation(const SimpleGraph& g, int max_vertices) {
  if (g.n > max_vertices)
    throw BudgetError("realize_permutation: " + std::to_string(g.n) + " vertices exceeds budget");
  std::vector<int> word(size_t(g.n));
  std::iota(word.begin(), word.end(), 1);
  int edges = g.edge_count();
  auto degs = degree_multiset(g);
  do {
    SimpleGraph cand = inversion_graph(word);
    if (cand.edge_count() != edges || degree_multiset(cand) != degs) continue;
    if (!graph_iso(cand, g)) continue;
    Share s;
    for (int i = 1; i <= g.n; ++i) s.strand1.push_back(i);
    s.strand2 = word;
    return s;
  } while (std::next_permutation(word.begin(), word.end()));
  return std::nullopt;
}

namespace {

bool circle_search(std::vector<int>& word, std::vector<int>& free_pos, int next_label,
                   const SimpleGraph& target, const std::vector<int>& target_degs, int edges,
                   ChordDiagram& out) {
  if (free_pos.empty()) {
    ChordDiagram d{word};
    SimpleGraph cand = intersection_graph(d);
    if (cand.edge_count() != edges || degree_multiset(cand) != target_degs) return false;
    if (!graph_iso(cand, target)) return false;
    out = d;
    return true;
  }
  int a = free_pos[0];
  for (size_t i = 1; i < free_pos.size(); ++i) {
    int b = free_pos[size_t(i)];
    word[size_t(a)] = word[size_t(b)] = next_label;
    std::vector<int> rest;
    rest.reserve(free_pos.size() - 2);
    for (size_t j = 1; j < free_pos.size(); ++j)
      if (j != i) rest.push_back(free_pos[j]);
    if (circle_search(word, rest, next_label + 1, target, target_degs, edges, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<ChordDiagram> realize_circle(const SimpleGraph& g, int max_vertices) {
  if (g.n > max_vertices)
    throw BudgetError("realize_circle: " + std::to_string(g.n) + " vertices exceeds budget");
  std::vector<int> word(size_t(2 * g.n), 0);
  std::vector<int> free_pos(size_t(2 * g.n));
  std::iota(free_pos.begin(), free_pos.end(), 0);
  ChordDiagram out;
  if (circle_search(word, free_pos, 1, g, degree_multiset(g), g.edge_count(), out))
    return normalize_labels(out);
  return std::nullopt;
}

SimpleGraph local_complement(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.n) throw InputError("local_complement: vertex out of range");
  SimpleGraph out = g;
  for (int a = 0; a < g.n; ++a) {
    if (a == v || !g.edge(v, a)) continue;
    for (int b = a + 1; b < g.n; ++b) {
      if (b == v || !g.edge(v, b)) continue;
      // toggle a-b
      out.adj[size_t(a)] ^= 1u << unsigned(b);
      out.adj[size_t(b)] ^= 1u << unsigned(a);
    }
  }
  return out;
}

std::array<SimpleGraph, 3> circle_obstructions() {
  // W5: hub 0 joined to the 5-cycle 1..5
  SimpleGraph w5 = SimpleGraph::empty(6);
  for (int i = 1; i <= 5; ++i) {
    w5.set_edge(0, i);
    w5.set_edge(i, i % 5 + 1);
  }
  // BW3: hub 0, spokes 1,2,3 subdivided toward the rim triangle 4,5,6
  SimpleGraph bw3 = SimpleGraph::empty(7);
  for (int i = 1; i <= 3; ++i) {
    bw3.set_edge(0, i);
    bw3.set_edge(i, i + 3);
  }
  bw3.set_edge(4, 5);
  bw3.set_edge(5, 6);
  bw3.set_edge(4, 6);
  // W7: hub 0 joined to the 7-cycle 1..7
  SimpleGraph w7 = SimpleGraph::empty(8);
  for (int i = 1; i <= 7; ++i) {
    w7.set_edge(0, i);
    w7.set_edge(i, i % 7 + 1);
  }
  return {w5, bw3, w7};
}

namespace {

bool embed_backtrack(const SimpleGraph& g, const SimpleGraph& h, bool induced,
                     std::vector<int>& map, uint32_t used, size_t depth) {
  if (depth == map.size()) return true;
  int u = int(depth);
  for (int v = 0; v < g.n; ++v) {
    if ((used >> unsigned(v)) & 1u) continue;
    if (g.degree(v) < h.degree(u) && !induced) continue;
    bool ok = true;
    for (int w = 0; w < u && ok; ++w) {
      bool he = h.edge(u, w);
      bool ge = g.edge(v, map[size_t(w)]);
      if (he && !ge) ok = false;
      if (induced && !he && ge) ok = false;
    }
    if (!ok) continue;
    map[size_t(u)] = v;
    if (embed_backtrack(g, h, induced, map, used | (1u << unsigned(v)), depth + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_subgraph(const SimpleGraph& g, const SimpleGraph& h, bool induced) {
  if (h.n > g.n) return false;
  std::vector<int> map(size_t(h.n), -1);
  return embed_backtrack(g, h, induced, map, 0, 0);
}

BouchetReport bouchet_scan(const SimpleGraph& g, size_t budget) {
  BouchetReport report;
  auto obstructions = circle_obstructions();
  std::set<uint64_t> seen;
  std::queue<SimpleGraph> queue;
  queue.push(g);
  seen.insert(graph_canon(g));
  while (!queue.empty()) {
    if (seen.size() > budget) {
      report.verdict = BouchetVerdict::Inconclusive;
      report.orbit_explored = seen.size();
      return report;
    }
    SimpleGraph cur = queue.front();
    queue.pop();
    for (int idx = 0; idx < 3; ++idx) {
      bool sub = contains_subgraph(cur, obstructions[size_t(idx)], /*induced=*/false);
      bool ind = sub && contains_subgraph(cur, obstructions[size_t(idx)], /*induced=*/true);
      if (sub) {
        report.verdict = BouchetVerdict::Obstructed;
        report.subgraph_hit = true;
        report.induced_hit = ind;
        report.obstruction = idx;
        report.orbit_explored = seen.size();
        report.witness = cur.text();
        return report;
      }
    }
    for (int v = 0; v < cur.n; ++v) {
      SimpleGraph next = local_complement(cur, v);
      if (seen.insert(graph_canon(next)).second) queue.push(next);
    }
  }
  report.verdict = BouchetVerdict::Clear;
  report.orbit_explored = seen.size();
  return report;
}

std::vector<SimpleGraph> permutation_graphs(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::map<uint64_t, SimpleGraph> reps;
  do {
    SimpleGraph g = inversion_graph(word);
    reps.try_emplace(graph_canon(g), g);
  } while (std::next_permutation(word.begin(), word.end()));
  std::vector<SimpleGraph> out;
  out.reserve(reps.size());
  for (auto& [key, g] : reps) out.push_back(std::move(g));
  return out;
}

RSeries graph_rseries(ShareSpace& space, const SimpleGraph& g, int max_vertices) {
  auto share = realize_permutation(g, max_vertices);
  if (!share)
    throw NotRealizableError("graph is not realizable by an arch-free share: " + g.text());
  SElem elem = space.from_share(reverse_strand(*share));
  return gen_series(space, elem);
}

ChordDiagram join_with_discrete_diagram(const Share& s, int n) {
  // closure of dot(reverse_strand(s), y^n): the word is
  // s1-reversed + (new labels) + s2 + (new labels reversed)
  Share rev = reverse_strand(s);
  return join(rev, all_crossing_share(n));
}

DualityReport verify_duality(ShareSpace& space, const SimpleGraph& g, int max_vertices) {
  DualityReport report;
  report.vertices = g.n;
  auto share = realize_permutation(g, max_vertices);
  if (!share) return report;  // realizable = false
  report.realizable = true;

  SElem elem_g = space.from_share(reverse_strand(*share));
  // the non-reversed share realizes the complement under the closure
  SElem elem_comp = space.from_share(*share);
  RSeries rg = gen_series(space, elem_g);
  RSeries rc = gen_series(space, elem_comp);

  report.pass = true;
  std::set<int> keys;
  for (const auto& [k, r] : rg.terms) keys.insert(k);
  for (const auto& [k, r] : rc.terms) keys.insert(k);
  for (int k : keys) {
    DualityTerm term;
    term.k = k;
    term.r_graph = rg.at(k);
    term.r_complement = rc.at(k);
    PolyC expected = (g.n - k) % 2 == 0 ? term.r_graph : -term.r_graph;
    term.ok = term.r_complement == expected;
    report.pass = report.pass && term.ok;
    report.terms.push_back(std::move(term));
  }
  return report;
}

}  // namespace sl2w
