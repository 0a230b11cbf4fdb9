#include <sl2w/genfun.hpp>

#include <doctest.h>

#include <random>

#include "test_helpers.hpp"

using namespace sl2w;
using sl2w::testing::pc;

namespace {

struct Fixture {
  RewriteEngine engine;
  ShareSpace space{engine};
};

RSeries k3n_series() {
  RSeries r;
  r.set(0, pc("0 0 1/6"));
  r.set(1, pc("0 2/5 -2/5 3/5"));
  r.set(2, pc("0 -1 4/3"));
  r.set(3, pc("0 3/5 -11/10 2/5"));
  return r;
}

}  // namespace

TEST_CASE("gen_series basics") {
  Fixture f;
  RSeries e1 = gen_series(f.space, f.space.e_poly(1));
  CHECK(e1.terms.size() == 1);
  CHECK(e1.at(1) == pc("0 1"));

  RSeries one = gen_series(f.space, SElem::one(Basis::Y));
  CHECK(one.terms.size() == 1);
  CHECK(one.at(0) == pc("1"));

  CHECK(gen_series(f.space, SElem::unit(Basis::Y, 3)) == k3n_series());
}

TEST_CASE("series values") {
  Fixture f;
  SElem y = SElem::unit(Basis::Y, 1);
  CHECK(series_values(f.space, y, 0) == pc("0 1"));
  PolyC expect = pc("0 1");
  for (int n = 1; n <= 4; ++n) {
    expect = expect * pc("-1 1");
    CHECK(series_values(f.space, y, n) == expect);  // trees c(c-1)^n
  }
  CHECK(series_values(f.space, SElem::unit(Basis::Y, 3), 0) == pc("0 0 0 1"));

  SUBCASE("equals the pairing with y^n") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 8; ++trial) {
      int m = int(rng() % 5), n = int(rng() % 4);
      CHECK(series_values(f.space, SElem::unit(Basis::Y, m), n) ==
            f.space.pairing(SElem::unit(Basis::Y, m), SElem::unit(Basis::Y, n)));
    }
  }

  SUBCASE("symmetric in (m, n): complete bipartite values") {
    for (int m = 0; m <= 5; ++m)
      for (int n = 0; n <= 5; ++n)
        CHECK(series_values(f.space, SElem::unit(Basis::Y, m), n) ==
              series_values(f.space, SElem::unit(Basis::Y, n), m));
  }
}

TEST_CASE("duality of residues") {
  RSeries r;
  r.set(0, pc("1"));
  CHECK(dual_rseries(r, 0) == r);

  RSeries k3 = k3n_series();
  RSeries dual = dual_rseries(k3, 3);
  CHECK(dual.at(0) == -k3.at(0));
  CHECK(dual.at(1) == k3.at(1));
  CHECK(dual.at(2) == -k3.at(2));
  CHECK(dual.at(3) == k3.at(3));
  CHECK_THROWS_AS(dual_rseries(k3, 2), InputError);
}

TEST_CASE("complete bipartite recurrence against the eigenbasis route") {
  Fixture f;
  RSeries cb0 = cb_series(f.space, 0);
  CHECK(cb0.terms.size() == 1);
  CHECK(cb0.at(0) == pc("1"));
  CHECK(cb_series(f.space, 3) == k3n_series());
  for (int m = 0; m <= 6; ++m)
    CHECK(cb_series(f.space, m) == gen_series(f.space, SElem::unit(Basis::Y, m)));
}

TEST_CASE("split recurrence against the eigenbasis route") {
  Fixture f;
  for (int m = 0; m <= 6; ++m) {
    SElem xm = f.space.basis_convert(SElem::unit(Basis::X, m), Basis::Y);
    CHECK(split_series(f.space, m) == gen_series(f.space, xm));
  }
  // same magnitudes as the bipartite residues, alternate signs
  CHECK(split_series(f.space, 3) == dual_rseries(cb_series(f.space, 3), 3));
}

TEST_CASE("complete graph values") {
  Fixture f;
  CHECK(k_complete(f.space, 0) == pc("1"));
  CHECK(k_complete(f.space, 1) == pc("0 1"));
  CHECK(k_complete(f.space, 2) == pc("0 -1 1"));
  CHECK(k_complete(f.space, 3) == pc("0 2 -3 1"));
  for (int m = 0; m <= 5; ++m)
    CHECK(k_complete(f.space, m) == f.engine.wsl2_diagram(complete_graph_diagram(m)));
}

TEST_CASE("reconstruction") {
  Fixture f;
  RSeries just_y;
  just_y.set(1, pc("0 1"));
  CHECK(reconstruct_selem(f.space, just_y) == SElem(Basis::Y, {PolyC(), pc("1")}));

  SUBCASE("round trip") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<PolyC> coeffs;
      int deg = 1 + int(rng() % 6);
      for (int i = 0; i <= deg; ++i) {
        std::vector<Rational> v;
        for (int j = 0, d = int(rng() % 3); j <= d; ++j)
          v.push_back(Rational(int(rng() % 9) - 4));
        coeffs.push_back(PolyC(std::move(v)));
      }
      SElem v(Basis::Y, std::move(coeffs));
      CHECK(reconstruct_selem(f.space, gen_series(f.space, v)) == v);
    }
  }

  SUBCASE("non-divisible residues are diagnostic") {
    RSeries bad;
    bad.set(1, pc("1"));  // r_1 = 1 is not divisible by e_1(c) = c
    CHECK_THROWS_AS(reconstruct_selem(f.space, bad), InputError);
  }
}
