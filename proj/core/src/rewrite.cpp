#include <sl2w/rewrite.hpp>

#include <sl2w/json_io.hpp>

#include <algorithm>
#include <array>
#include <cassert>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace sl2w {

namespace {

// Tokens of a working share: positive values are chord ids, negative values
// -1, -2, -3 are the three legs of the single pending epsilon-vertex.
using Word = std::vector<int>;
using Strands = std::array<Word, 2>;

constexpr int kLeg0 = -1;

bool is_leg(int t) { return t < 0; }
int leg_index(int t) { return -t - 1; }
int leg_token(int idx) { return -idx - 1; }

int sign3(int i, int j, int k) {
  // parity of the permutation (i,j,k) of (0,1,2)
  return (j - i) * (k - i) * (k - j) > 0 ? 1 : -1;
}

struct SlotRef {
  int strand = 0;
  int pos = 0;
};

std::map<int, std::vector<SlotRef>> chord_slots(const Strands& s) {
  std::map<int, std::vector<SlotRef>> out;
  for (int st = 0; st < 2; ++st)
    for (int i = 0; i < int(s[size_t(st)].size()); ++i) {
      int t = s[size_t(st)][size_t(i)];
      if (!is_leg(t)) out[t].push_back({st, i});
    }
  return out;
}

// Well-order used for the termination assertion:
// (chords, minimal arch length + 1 or 0 when arch-free, bridge crossings).
std::tuple<int, int, long> measure(const Strands& s) {
  auto slots = chord_slots(s);
  int min_arch = -1;
  for (const auto& [c, sl] : slots) {
    if (sl.size() == 2 && sl[0].strand == sl[1].strand) {
      int len = sl[1].pos - sl[0].pos - 1;
      if (min_arch < 0 || len < min_arch) min_arch = len;
    }
  }
  if (min_arch >= 0) return {int(slots.size()), min_arch + 1, 0};
  long crossings = 0;
  std::vector<std::pair<int, int>> pos;
  for (const auto& [c, sl] : slots) {
    int p1 = sl[0].strand == 0 ? sl[0].pos : sl[1].pos;
    int p2 = sl[0].strand == 1 ? sl[0].pos : sl[1].pos;
    pos.push_back({p1, p2});
  }
  for (size_t a = 0; a < pos.size(); ++a)
    for (size_t b = a + 1; b < pos.size(); ++b)
      if ((pos[a].first - pos[b].first) * (pos[a].second - pos[b].second) < 0) ++crossings;
  return {int(slots.size()), 0, crossings};
}

Share to_share(const Strands& s) {
  Share out;
  out.strand1.assign(s[0].begin(), s[0].end());
  out.strand2.assign(s[1].begin(), s[1].end());
  return out;
}

Strands to_strands(const Share& s) {
  Strands out;
  out[0].assign(s.strand1.begin(), s.strand1.end());
  out[1].assign(s.strand2.begin(), s.strand2.end());
  return out;
}

int fresh_chord_id(const Strands& s) {
  int mx = 0;
  for (const auto& w : s)
    for (int t : w) mx = std::max(mx, t);
  return mx + 1;
}

struct LegPos {
  std::array<SlotRef, 3> at;
};

LegPos leg_positions(const Strands& s) {
  LegPos out;
  for (int st = 0; st < 2; ++st)
    for (int i = 0; i < int(s[size_t(st)].size()); ++i) {
      int t = s[size_t(st)][size_t(i)];
      if (is_leg(t)) out.at[size_t(leg_index(t))] = {st, i};
    }
  return out;
}

// Resolves an epsilon-vertex state into plain shares with signs.
//
// Convention: the stored value is coeff * i * Psi(p0,p1,p2) with
// Psi = sum eps_{abc} x_a(p0) x_b(p1) x_c(p2); every contraction below pairs
// the implicit i with another i from a commutator, so all emitted
// coefficients are integers.
void resolve_vertex(int coeff, Strands tw, std::vector<std::pair<int, Share>>& out) {
  std::vector<std::pair<int, Strands>> work;
  work.emplace_back(coeff, std::move(tw));
  while (!work.empty()) {
    auto [cf, w] = std::move(work.back());
    work.pop_back();
    LegPos legs = leg_positions(w);

    // Two legs on adjacent slots contract to a chord toward the third leg:
    //   sum_{ab} eps_{abc} x_a x_b = i x_c.
    int ai = -1, aj = -1;
    for (int i = 0; i < 3 && ai < 0; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && legs.at[size_t(i)].strand == legs.at[size_t(j)].strand &&
            legs.at[size_t(j)].pos == legs.at[size_t(i)].pos + 1) {
          ai = i;
          aj = j;
          break;
        }
    if (ai >= 0) {
      int k = 3 - ai - aj;
      int sgn = sign3(ai, aj, k);
      int st = legs.at[size_t(ai)].strand;
      int q = legs.at[size_t(ai)].pos;
      int cid = fresh_chord_id(w);
      Strands nw = w;
      nw[size_t(st)].erase(nw[size_t(st)].begin() + q, nw[size_t(st)].begin() + q + 2);
      nw[size_t(st)].insert(nw[size_t(st)].begin() + q, cid);
      for (auto& strand : nw)
        for (auto& t : strand)
          if (is_leg(t)) t = cid;
      out.emplace_back(-cf * sgn, to_share(nw));
      continue;
    }

    // Otherwise slide the left leg of the closest same-strand pair one step
    // right across a normal chord end. The transposition keeps the vertex;
    // the commutator term contracts eps.eps into two rewired plain shares.
    int m = -1;
    std::tuple<int, int, int> best{0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j || legs.at[size_t(i)].strand != legs.at[size_t(j)].strand) continue;
        int gap = legs.at[size_t(j)].pos - legs.at[size_t(i)].pos;
        if (gap <= 0) continue;
        std::tuple<int, int, int> cand{gap, legs.at[size_t(i)].strand, legs.at[size_t(i)].pos};
        if (m < 0 || cand < best) {
          best = cand;
          m = i;
        }
      }
    if (m < 0) throw std::logic_error("epsilon-vertex with no two legs on one strand");
    int st = legs.at[size_t(m)].strand;
    int p = legs.at[size_t(m)].pos;
    int wtok = w[size_t(st)][size_t(p) + 1];
    assert(!is_leg(wtok));
    int o1 = -1, o2 = -1;
    for (int i = 0; i < 3; ++i)
      if (i != m) (o1 < 0 ? o1 : o2) = i;
    int sgn2 = sign3(m, o1, o2);

    // transposed vertex continues
    Strands nt = w;
    std::swap(nt[size_t(st)][size_t(p)], nt[size_t(st)][size_t(p) + 1]);
    work.emplace_back(cf, std::move(nt));

    // two plain terms: the vertex and the crossed chord are consumed,
    // two chords connect {o1-slot, o2-slot, merged slot, partner of wtok}.
    for (int flip = 0; flip < 2; ++flip) {
      Strands nw = w;
      int base = fresh_chord_id(w);
      int a_id = base, b_id = base + 1;
      // merged slot: remove leg and crossed end, insert marker chord end
      nw[size_t(st)].erase(nw[size_t(st)].begin() + p, nw[size_t(st)].begin() + p + 2);
      nw[size_t(st)].insert(nw[size_t(st)].begin() + p, flip == 0 ? b_id : a_id);
      for (auto& strand : nw)
        for (auto& t : strand) {
          if (is_leg(t)) {
            if (leg_index(t) == o1)
              t = a_id;
            else if (leg_index(t) == o2)
              t = b_id;
            else
              throw std::logic_error("stray leg");
          } else if (t == wtok) {
            t = flip == 0 ? a_id : b_id;
          }
        }
      out.emplace_back(flip == 0 ? -cf * sgn2 : cf * sgn2, to_share(nw));
    }
  }
}

// Canonical cache key: label-normalized, minimized over the strand swap.
// Swapping strands exchanges the roles of c1 and c2 in the value.
struct CacheKey {
  std::string key;
  bool swapped = false;
};

std::string encode(const Share& s) {
  std::string out;
  out.reserve(s.strand1.size() + s.strand2.size() + 1);
  for (int v : s.strand1) out.push_back(char(v));
  out.push_back(char(127));
  for (int v : s.strand2) out.push_back(char(v));
  return out;
}

CacheKey cache_key(const Share& s) {
  std::string a = encode(normalize_labels(s));
  Share sw;
  sw.strand1 = s.strand2;
  sw.strand2 = s.strand1;
  std::string b = encode(normalize_labels(sw));
  if (a <= b) return {std::move(a), false};
  return {std::move(b), true};
}

Share decode(const std::string& key) {
  Share s;
  bool second = false;
  for (char ch : key) {
    if (ch == char(127)) {
      second = true;
      continue;
    }
    (second ? s.strand2 : s.strand1).push_back(int(ch));
  }
  return s;
}

}  // namespace

PolyC1C2X RewriteEngine::normal_form(const Share& s) {
  CacheKey ck = cache_key(s);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(ck.key);
    if (it != cache_.end()) return ck.swapped ? it->second.swap_c1c2() : it->second;
  }
  PolyC1C2X value = reduce(decode(ck.key));
  {
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(ck.key, value);
  }
  return ck.swapped ? value.swap_c1c2() : value;
}

PolyC1C2X RewriteEngine::reduce(const Share& share) {
  Strands s = to_strands(share);
  auto m0 = measure(s);
  auto slots = chord_slots(s);

  if (slots.empty()) return PolyC1C2X::one();

  auto strip = [&](int chord) {
    Share next;
    for (int t : s[0])
      if (t != chord) next.strand1.push_back(t);
    for (int t : s[1])
      if (t != chord) next.strand2.push_back(t);
    return next;
  };

  // NF(D) = NF(D with the pair transposed) + resolved defect terms.
  auto swap_step = [&](int st, int p) {
    int u = s[size_t(st)][size_t(p)];
    int v = s[size_t(st)][size_t(p) + 1];
    if (u == v || is_leg(u) || is_leg(v)) throw std::logic_error("bad transposition site");

    Strands swapped = s;
    std::swap(swapped[size_t(st)][size_t(p)], swapped[size_t(st)][size_t(p) + 1]);
    if (!(measure(swapped) < m0))
      throw std::logic_error("rewrite step did not decrease the well-order");
    PolyC1C2X total = normal_form(to_share(swapped));

    // defect vertex: legs 0/1 at the partner ends of u/v, leg 2 at the
    // merged slot
    Strands tw = s;
    tw[size_t(st)].erase(tw[size_t(st)].begin() + p, tw[size_t(st)].begin() + p + 2);
    tw[size_t(st)].insert(tw[size_t(st)].begin() + p, leg_token(2));
    for (auto& strand : tw)
      for (auto& t : strand) {
        if (t == u)
          t = leg_token(0);
        else if (t == v)
          t = leg_token(1);
      }
    std::vector<std::pair<int, Share>> plain;
    resolve_vertex(1, std::move(tw), plain);
    for (auto& [sign, sh] : plain) {
      if (sh.chords() >= int(slots.size()))
        throw std::logic_error("defect term did not lose a chord");
      total += normal_form(sh).scaled(Rational(sign));
    }
    return total;
  };

  // minimal arch, leftmost left end (strand 1 first)
  int arch_chord = -1, arch_len = -1, arch_strand = -1, arch_pos = -1;
  for (const auto& [c, sl] : slots) {
    if (sl[0].strand != sl[1].strand) continue;
    int len = sl[1].pos - sl[0].pos - 1;
    if (arch_chord < 0 || std::tuple(len, sl[0].strand, sl[0].pos) <
                              std::tuple(arch_len, arch_strand, arch_pos)) {
      arch_chord = c;
      arch_len = len;
      arch_strand = sl[0].strand;
      arch_pos = sl[0].pos;
    }
  }

  if (arch_chord >= 0) {
    if (arch_len == 0) return normal_form(strip(arch_chord)).shifted_c(arch_strand);
    if (arch_len == 1) {
      PolyC1C2X sub = normal_form(strip(arch_chord));
      return sub.shifted_c(arch_strand) - sub;
    }
    return swap_step(arch_strand, arch_pos);
  }

  // no arches: eliminate the leftmost descent on strand 1, if any
  std::map<int, int> pos2;
  for (int i = 0; i < int(s[1].size()); ++i) pos2[s[1][size_t(i)]] = i;
  for (int i = 0; i + 1 < int(s[0].size()); ++i) {
    if (pos2[s[0][size_t(i)]] > pos2[s[0][size_t(i) + 1]]) return swap_step(0, i);
  }

  // arch-free, crossing-free: x^n
  return PolyC1C2X::monomial({0, 0, int(s[0].size())});
}

PolyC RewriteEngine::wsl2_diagram(const ChordDiagram& d) {
  Share s;
  s.strand1 = d.word;
  PolyC1C2X nf = normal_form(s);
  if (nf.degree_c2() != 0 || nf.degree_x() != 0)
    throw std::logic_error("diagram value escaped C[c1]");
  PolyCY collapsed = nf.collapse_c();
  PolyC out = collapsed.coeff(0);
  if (out.degree() != d.chords() || out.leading() != 1)
    throw std::logic_error("diagram value is not monic of degree n");
  return out;
}

PolyCY RewriteEngine::wsl2_share_in_x(const Share& s) { return normal_form(s).collapse_c(); }

size_t RewriteEngine::cache_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.size();
}

void RewriteEngine::clear_cache() {
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.clear();
}

void RewriteEngine::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // absent cache is a cold start, not an error
  std::string line;
  std::lock_guard<std::mutex> lock(mutex_);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto entry = json_io::parse_cache_line(line);
    if (!entry) continue;  // unknown format tag or malformed line
    cache_.emplace(encode(entry->first), entry->second);
  }
}

void RewriteEngine::save_cache(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw InputError("cannot write cache file '" + path + "'");
  std::lock_guard<std::mutex> lock(mutex_);
  // deterministic order
  std::vector<const std::string*> keys;
  keys.reserve(cache_.size());
  for (const auto& [k, v] : cache_) keys.push_back(&k);
  std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) { return *a < *b; });
  for (const auto* k : keys) out << json_io::cache_line(decode(*k), cache_.at(*k)) << "\n";
}

}  // namespace sl2w
