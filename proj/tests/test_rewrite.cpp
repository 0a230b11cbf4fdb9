#include <sl2w/rewrite.hpp>
#include <sl2w/sl2rep.hpp>

#include <doctest.h>

#include <cstdio>
#include <random>

#include "test_helpers.hpp"

using namespace sl2w;
using sl2w::testing::pc;

namespace {

PolyC1C2X mono(int c1, int c2, int x, long long num = 1, long long den = 1) {
  return PolyC1C2X::monomial({c1, c2, x}, Rational(num, den));
}

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

TEST_CASE("base normal forms") {
  RewriteEngine eng;
  CHECK(eng.normal_form(Share::parse("1 | 1")) == mono(0, 0, 1));
  CHECK(eng.normal_form(Share::parse("1 1 |")) == mono(1, 0, 0));
  CHECK(eng.normal_form(Share::parse("| 1 1")) == mono(0, 1, 0));
  CHECK(eng.normal_form(Share::parse("1 2 1 2 |")) == mono(2, 0, 0) - mono(1, 0, 0));
  // crossing bridges reduce through the four-term relation
  CHECK(eng.normal_form(Share::parse("1 2 | 2 1")) == mono(0, 0, 2) + mono(0, 0, 1));
  // pairwise crossing triple
  PolyC1C2X y3 = mono(0, 0, 3) + mono(0, 0, 2, 4) + mono(0, 0, 1, 2) - mono(1, 1, 0);
  CHECK(eng.normal_form(Share::parse("1 2 3 | 3 2 1")) == y3);
}

TEST_CASE("diagram values") {
  RewriteEngine eng;
  CHECK(eng.wsl2_diagram(ChordDiagram::parse("")) == pc("1"));
  CHECK(eng.wsl2_diagram(ChordDiagram::parse("1 1")) == pc("0 1"));
  CHECK(eng.wsl2_diagram(ChordDiagram::parse("1 2 1 3 2 3")) == pc("0 1 -2 1"));
  CHECK(eng.wsl2_diagram(ChordDiagram::parse("1 2 3 1 2 3")) == pc("0 2 -3 1"));
  // complete graphs through K_6
  CHECK(eng.wsl2_diagram(complete_graph_diagram(4)) == pc("0 -7 13 -6 1"));
  CHECK(eng.wsl2_diagram(complete_graph_diagram(5)) == pc("0 38 -79 45 -10 1"));
  CHECK(eng.wsl2_diagram(complete_graph_diagram(6)) == pc("0 -295 657 -430 115 -15 1"));
}

TEST_CASE("share values in S") {
  RewriteEngine eng;
  CHECK(eng.wsl2_share_in_x(Share::parse("1 2 | 1 2")) == PolyCY({PolyC(), PolyC(), pc("1")}));
  CHECK(eng.wsl2_share_in_x(Share::parse("1 2 | 2 1")) ==
        PolyCY({PolyC(), pc("1"), pc("1")}));
  // all-crossing triple: monic cubic in x
  PolyCY y3 = eng.wsl2_share_in_x(Share::parse("1 2 3 | 3 2 1"));
  CHECK(y3 == PolyCY({pc("0 0 -1"), pc("2"), pc("4"), pc("1")}));
}

TEST_CASE("leading term: arch-free m-bridge shares are monic of degree m") {
  RewriteEngine eng;
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 1 + int(rng() % 5);
    std::vector<int> word(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) word[size_t(i)] = i + 1;
    std::shuffle(word.begin(), word.end(), rng);
    Share s;
    for (int i = 1; i <= m; ++i) s.strand1.push_back(i);
    s.strand2 = word;
    PolyCY v = eng.wsl2_share_in_x(s);
    CHECK(v.degree() == m);
    CHECK(v.coeff(m) == pc("1"));
  }
}

TEST_CASE("multiplicativity under diagram concatenation") {
  RewriteEngine eng;
  std::mt19937 rng(17);
  auto random_diagram = [&](int n) {
    Share s = random_share(rng, n);
    ChordDiagram d;
    d.word = s.strand1;
    d.word.insert(d.word.end(), s.strand2.begin(), s.strand2.end());
    return normalize_labels(d);
  };
  for (int trial = 0; trial < 12; ++trial) {
    ChordDiagram a = random_diagram(1 + int(rng() % 3));
    ChordDiagram b = random_diagram(1 + int(rng() % 3));
    ChordDiagram ab;
    ab.word = a.word;
    for (int v : b.word) ab.word.push_back(v + a.chords());
    CHECK(eng.wsl2_diagram(ab) == eng.wsl2_diagram(a) * eng.wsl2_diagram(b));
  }
}

TEST_CASE("strand choice of the reversal does not matter in S") {
  RewriteEngine eng;
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    Share s = random_share(rng, 1 + int(rng() % 5));
    Share rev1 = reverse_strand(s);
    Share rev2 = s;
    std::reverse(rev2.strand2.begin(), rev2.strand2.end());
    rev2 = normalize_labels(rev2);
    CHECK(eng.wsl2_share_in_x(rev1) == eng.wsl2_share_in_x(rev2));
  }
}

TEST_CASE("engine agrees with the tensor oracle on random shares") {
  RewriteEngine eng;
  std::mt19937 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    Share s = random_share(rng, 1 + int(rng() % 4));
    PolyC1C2X nf = eng.normal_form(s);
    CHECK(oracle_check_nf(s, nf, default_rep_pairs(nf)));
  }
}

TEST_CASE("four-term combinations vanish") {
  RewriteEngine eng;
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Share base = random_share(rng, 2 + int(rng() % 3));
    int moving = base.chords() + 1;
    int fs = int(rng() % 2);
    auto& fw = fs == 0 ? base.strand1 : base.strand2;
    fw.insert(fw.begin() + long(rng() % unsigned(fw.size() + 1)), moving);
    int anchor = 1 + int(rng() % unsigned(base.chords()));
    PolyC1C2X total;
    for (int st = 0; st < 2; ++st) {
      const auto& w = st == 0 ? base.strand1 : base.strand2;
      for (int i = 0; i < int(w.size()); ++i) {
        if (w[size_t(i)] != anchor) continue;
        for (int offset = 0; offset < 2; ++offset) {
          Share variant = base;
          auto& vw = st == 0 ? variant.strand1 : variant.strand2;
          vw.insert(vw.begin() + i + offset, moving);
          PolyC1C2X nf = eng.normal_form(variant);
          total += offset == 0 ? nf : nf.scaled(Rational(-1));
        }
      }
    }
    CHECK(total.is_zero());
  }
}

TEST_CASE("memoized results agree with a fresh engine") {
  RewriteEngine warm;
  // populate the cache along a reduction that shares subproblems
  warm.wsl2_diagram(complete_graph_diagram(5));
  PolyC via_cache = warm.wsl2_diagram(complete_graph_diagram(4));
  RewriteEngine cold;
  CHECK(via_cache == cold.wsl2_diagram(complete_graph_diagram(4)));
  CHECK(warm.cache_size() > cold.cache_size());
}

TEST_CASE("strand swap symmetry of the cache") {
  RewriteEngine eng;
  PolyC1C2X a = eng.normal_form(Share::parse("1 1 2 | 2"));
  PolyC1C2X b = eng.normal_form(Share::parse("2 | 1 1 2"));
  CHECK(a.swap_c1c2() == b);
}

TEST_CASE("cache file round trip") {
  std::string path = "rewrite_cache_test.jsonl";
  RewriteEngine eng;
  eng.wsl2_diagram(ChordDiagram::parse("1 2 3 1 2 3"));
  size_t n = eng.cache_size();
  eng.save_cache(path);
  RewriteEngine eng2;
  eng2.load_cache(path);
  CHECK(eng2.cache_size() == n);
  CHECK(eng2.wsl2_diagram(ChordDiagram::parse("1 2 3 1 2 3")) == pc("0 2 -3 1"));
  std::remove(path.c_str());
}
