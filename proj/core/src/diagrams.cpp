#include <sl2w/diagrams.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sl2w {

namespace {

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in{std::string(text)};
  while (in >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v <= 0) throw InputError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad chord label '" + tok + "'");
    }
  }
  return out;
}

void check_double_occurrence(const std::vector<int>& all) {
  std::map<int, int> count;
  for (int v : all) ++count[v];
  for (const auto& [label, c] : count) {
    if (c != 2)
      throw InputError("label " + std::to_string(label) + " occurs " + std::to_string(c) +
                       " times, expected 2");
  }
}

std::vector<int> relabel(const std::vector<int>& word, std::map<int, int>& names) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word) {
    auto [it, fresh] = names.try_emplace(v, int(names.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

std::string word_text(const std::vector<int>& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace

// ---- SimpleGraph ----

SimpleGraph SimpleGraph::empty(int n) {
  SimpleGraph g;
  g.n = n;
  g.adj.assign(size_t(n), 0);
  return g;
}

void SimpleGraph::set_edge(int u, int v) {
  if (u == v) throw InputError("loops are not allowed");
  adj[size_t(u)] |= 1u << unsigned(v);
  adj[size_t(v)] |= 1u << unsigned(u);
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (uint32_t row : adj) total += __builtin_popcount(row);
  return total / 2;
}

int SimpleGraph::degree(int v) const { return __builtin_popcount(adj[size_t(v)]); }

SimpleGraph SimpleGraph::parse(std::string_view text) {
  std::string s(text);
  auto colon = s.find(':');
  std::string head = colon == std::string::npos ? s : s.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(head);
  } catch (const std::exception&) {
    throw InputError("bad graph header '" + head + "'");
  }
  if (n < 0 || n > 31) throw InputError("vertex count out of range");
  SimpleGraph g = empty(n);
  if (colon == std::string::npos) return g;
  std::string rest = s.substr(colon + 1);
  std::istringstream in(rest);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    if (dash == std::string::npos) throw InputError("bad edge '" + item + "'");
    int u, v;
    try {
      u = std::stoi(item.substr(0, dash));
      v = std::stoi(item.substr(dash + 1));
    } catch (const std::exception&) {
      throw InputError("bad edge '" + item + "'");
    }
    if (u < 1 || u > n || v < 1 || v > n) throw InputError("edge endpoint out of range");
    g.set_edge(u - 1, v - 1);
  }
  return g;
}

std::string SimpleGraph::text() const {
  std::string out = std::to_string(n) + ":";
  bool first = true;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(u, v)) {
        out += first ? " " : ",";
        out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
        first = false;
      }
  return out;
}

// ---- parsing ----

ChordDiagram ChordDiagram::parse(std::string_view text) {
  ChordDiagram d;
  d.word = parse_word(text);
  check_double_occurrence(d.word);
  return normalize_labels(d);
}

std::string ChordDiagram::text() const { return word_text(word); }

Share Share::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw InputError("share text needs '|'");
  Share s;
  s.strand1 = parse_word(text.substr(0, bar));
  s.strand2 = parse_word(text.substr(bar + 1));
  std::vector<int> all = s.strand1;
  all.insert(all.end(), s.strand2.begin(), s.strand2.end());
  check_double_occurrence(all);
  return normalize_labels(s);
}

std::string Share::text() const { return word_text(strand1) + " | " + word_text(strand2); }

bool Share::arch_free() const {
  std::set<int> seen;
  for (int v : strand1) {
    if (!seen.insert(v).second) return false;
  }
  seen.clear();
  for (int v : strand2) {
    if (!seen.insert(v).second) return false;
  }
  return true;
}

ChordDiagram normalize_labels(const ChordDiagram& d) {
  std::map<int, int> names;
  return ChordDiagram{relabel(d.word, names)};
}

Share normalize_labels(const Share& s) {
  std::map<int, int> names;
  Share out;
  out.strand1 = relabel(s.strand1, names);
  out.strand2 = relabel(s.strand2, names);
  return out;
}

// ---- intersection graphs ----

SimpleGraph intersection_graph(const ChordDiagram& d) {
  int n = d.chords();
  SimpleGraph g = SimpleGraph::empty(n);
  std::vector<std::pair<int, int>> span(size_t(n), {-1, -1});
  for (int i = 0; i < int(d.word.size()); ++i) {
    auto& s = span[size_t(d.word[size_t(i)] - 1)];
    (s.first < 0 ? s.first : s.second) = i;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto [a1, a2] = span[size_t(a)];
      auto [b1, b2] = span[size_t(b)];
      bool in1 = a1 < b1 && b1 < a2;
      bool in2 = a1 < b2 && b2 < a2;
      if (in1 != in2) g.set_edge(a, b);
    }
  return g;
}

TwoColoredGraph two_colored_graph(const Share& s) {
  int n = s.chords();
  TwoColoredGraph out;
  out.graph = SimpleGraph::empty(n);
  out.color.assign(size_t(n), ChordColor::Black);

  // (strand, position) per chord end
  std::vector<std::vector<std::pair<int, int>>> ends(static_cast<size_t>(n));
  for (int i = 0; i < int(s.strand1.size()); ++i) ends[size_t(s.strand1[size_t(i)] - 1)].push_back({0, i});
  for (int i = 0; i < int(s.strand2.size()); ++i) ends[size_t(s.strand2[size_t(i)] - 1)].push_back({1, i});

  for (int a = 0; a < n; ++a)
    if (ends[size_t(a)][0].first == ends[size_t(a)][1].first) out.color[size_t(a)] = ChordColor::White;

  auto arch_contains = [&](int arch, int strand, int pos) {
    return ends[size_t(arch)][0].first == strand && ends[size_t(arch)][0].second < pos &&
           pos < ends[size_t(arch)][1].second;
  };

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool aw = out.color[size_t(a)] == ChordColor::White;
      bool bw = out.color[size_t(b)] == ChordColor::White;
      bool cross = false;
      if (aw && bw) {
        // arches intersect iff on the same strand with alternating ends
        if (ends[size_t(a)][0].first == ends[size_t(b)][0].first) {
          int a1 = ends[size_t(a)][0].second, a2 = ends[size_t(a)][1].second;
          int b1 = ends[size_t(b)][0].second, b2 = ends[size_t(b)][1].second;
          cross = (a1 < b1 && b1 < a2) != (a1 < b2 && b2 < a2);
        }
      } else if (aw != bw) {
        int arch = aw ? a : b;
        int bridge = aw ? b : a;
        for (auto [st, pos] : ends[size_t(bridge)]) cross = cross || arch_contains(arch, st, pos);
      } else {
        // bridges: opposite order on the two strands
        auto pos_on = [&](int chord, int strand) {
          for (auto [st, pos] : ends[size_t(chord)])
            if (st == strand) return pos;
          return -1;
        };
        cross = (pos_on(a, 0) - pos_on(b, 0)) * (pos_on(a, 1) - pos_on(b, 1)) < 0;
      }
      if (cross) out.graph.set_edge(a, b);
    }
  return out;
}

// ---- products ----

ChordDiagram closure(const Share& s) {
  ChordDiagram d;
  d.word = s.strand1;
  d.word.insert(d.word.end(), s.strand2.begin(), s.strand2.end());
  return normalize_labels(d);
}

namespace {
Share relabel_after(const Share& h, int offset) {
  Share out = h;
  for (int& v : out.strand1) v += offset;
  for (int& v : out.strand2) v += offset;
  return out;
}
}  // namespace

Share dot(const Share& i, const Share& h) {
  Share a = normalize_labels(i);
  Share b = relabel_after(normalize_labels(h), a.chords());
  Share out;
  out.strand1 = a.strand1;
  out.strand1.insert(out.strand1.end(), b.strand1.begin(), b.strand1.end());
  out.strand2 = a.strand2;
  out.strand2.insert(out.strand2.end(), b.strand2.begin(), b.strand2.end());
  return normalize_labels(out);
}

Share cross(const Share& i, const Share& h) {
  Share a = normalize_labels(i);
  Share b = relabel_after(normalize_labels(h), a.chords());
  Share out;
  out.strand1 = a.strand1;
  out.strand1.insert(out.strand1.end(), b.strand1.begin(), b.strand1.end());
  out.strand2 = b.strand2;
  out.strand2.insert(out.strand2.end(), a.strand2.begin(), a.strand2.end());
  return normalize_labels(out);
}

ChordDiagram join(const Share& i, const Share& h) { return closure(dot(i, h)); }

Share reverse_strand(const Share& s) {
  Share out = s;
  std::reverse(out.strand1.begin(), out.strand1.end());
  return normalize_labels(out);
}

// ---- canonical forms and enumeration ----

std::vector<int> canonical_diagram(const ChordDiagram& d) {
  const auto& w = d.word;
  if (w.empty()) return {};
  std::vector<int> best;
  for (size_t r = 0; r < w.size(); ++r) {
    std::vector<int> rot(w.begin() + long(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + long(r));
    std::map<int, int> names;
    rot = relabel(rot, names);
    if (best.empty() || rot < best) best = rot;
  }
  return best;
}

namespace {
void pairings(std::vector<int>& word, std::vector<int>& free_pos, int next_label,
              std::set<std::vector<int>>& out) {
  if (free_pos.empty()) {
    out.insert(canonical_diagram(ChordDiagram{word}));
    return;
  }
  int a = free_pos[0];
  for (size_t i = 1; i < free_pos.size(); ++i) {
    int b = free_pos[size_t(i)];
    word[size_t(a)] = word[size_t(b)] = next_label;
    std::vector<int> rest;
    rest.reserve(free_pos.size() - 2);
    for (size_t j = 1; j < free_pos.size(); ++j)
      if (j != i) rest.push_back(free_pos[j]);
    pairings(word, rest, next_label + 1, out);
  }
}
}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(int n, int max_chords) {
  if (n < 0) throw InputError("negative chord count");
  if (n > max_chords)
    throw BudgetError("enumerate_diagrams: n=" + std::to_string(n) + " exceeds budget " +
                      std::to_string(max_chords));
  std::set<std::vector<int>> canon;
  std::vector<int> word(size_t(2 * n), 0);
  std::vector<int> free_pos(size_t(2 * n));
  for (int i = 0; i < 2 * n; ++i) free_pos[size_t(i)] = i;
  pairings(word, free_pos, 1, canon);
  std::vector<ChordDiagram> out;
  out.reserve(canon.size());
  for (const auto& w : canon) out.push_back(ChordDiagram{w});
  return out;
}

Share all_crossing_share(int m) {
  Share s;
  for (int i = 1; i <= m; ++i) s.strand1.push_back(i);
  for (int i = m; i >= 1; --i) s.strand2.push_back(i);
  return s;
}

Share parallel_share(int m) {
  Share s;
  for (int i = 1; i <= m; ++i) {
    s.strand1.push_back(i);
    s.strand2.push_back(i);
  }
  return s;
}

ChordDiagram complete_graph_diagram(int m) {
  ChordDiagram d;
  for (int r = 0; r < 2; ++r)
    for (int i = 1; i <= m; ++i) d.word.push_back(i);
  return d;
}

}  // namespace sl2w
