#include <sl2w/sweep.hpp>

#include <sl2w/genfun.hpp>
#include <sl2w/graphs.hpp>
#include <sl2w/sl2rep.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

namespace sl2w {

namespace {

PolyC pc(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(parse_rational(s));
  return PolyC(std::move(v));
}

// The complete bipartite residues of the joins (discrete_3, n).
RSeries k3n_series() {
  RSeries r;
  r.set(0, pc({"0", "0", "1/6"}));
  r.set(1, pc({"0", "2/5", "-2/5", "3/5"}));
  r.set(2, pc({"0", "-1", "4/3"}));
  r.set(3, pc({"0", "3/5", "-11/10", "2/5"}));
  return r;
}

RSeries bull_series() {
  RSeries r;
  r.set(1, pc({"0", "8/70", "22/70", "-13/70", "-60/70", "30/70"}));
  r.set(3, pc({"0", "-108/45", "108/45", "123/45", "-115/45", "20/45"}));
  r.set(5, pc({"0", "540/126", "-1224/126", "813/126", "-200/126", "16/126"}));
  return r;
}

RSeries c5_join_series() {
  RSeries r;
  r.set(1, pc({"0", "324/630", "576/630", "-999/630", "-540/630", "270/630"}));
  r.set(3, pc({"0", "756/630", "-2646/630", "3234/630", "-1610/630", "280/630"}));
  r.set(5, pc({"0", "2700/630", "-6120/630", "4065/630", "-1000/630", "80/630"}));
  return r;
}

SElem c5_expected() {
  return SElem(Basis::Y, {pc({"0", "0", "5", "1"}), pc({"6", "8", "-14"}),
                          pc({"-26", "-6", "5"}), pc({"29"}), pc({"-10"}), pc({"1"})});
}

bool is_tree(const SimpleGraph& g) {
  if (g.n == 0) return false;
  if (g.edge_count() != g.n - 1) return false;
  std::vector<bool> seen(size_t(g.n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.n; ++w)
      if (g.edge(v, w) && !seen[size_t(w)]) {
        seen[size_t(w)] = true;
        ++visited;
        stack.push_back(w);
      }
  }
  return visited == g.n;
}

struct Criterion {
  int id;
  std::string name;
  std::function<bool(ShareSpace&, std::string&)> run;
};

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  out.push_back({1, "base values", [](ShareSpace& space, std::string& detail) {
    PolyC empty = space.engine().wsl2_diagram(ChordDiagram::parse(""));
    PolyC one_chord = space.engine().wsl2_diagram(ChordDiagram::parse("1 1"));
    detail = "empty -> 1, one chord -> c";
    return empty == PolyC::constant(Rational(1)) && one_chord == PolyC::variable();
  }});

  out.push_back({2, "tree formula", [](ShareSpace& space, std::string& detail) {
    int trees = 0;
    for (int n = 1; n <= 6; ++n) {
      PolyC expect = PolyC::variable();
      for (int i = 1; i < n; ++i) expect = expect * PolyC::c_minus(Rational(1));
      for (const auto& d : enumerate_diagrams(n)) {
        if (!is_tree(intersection_graph(d))) continue;
        ++trees;
        if (!(space.engine().wsl2_diagram(d) == expect)) {
          detail = "mismatch on " + d.text();
          return false;
        }
      }
    }
    detail = std::to_string(trees) + " tree diagrams match c(c-1)^(n-1)";
    return true;
  }});

  out.push_back({3, "oracle equivalence", [](ShareSpace& space, std::string& detail) {
    int checked = 0;
    for (int n = 0; n <= 5; ++n) {
      for (const auto& d : enumerate_diagrams(n)) {
        ++checked;
        if (!(space.engine().wsl2_diagram(d) == oracle_wsl2_diagram(d, 5))) {
          detail = "mismatch on " + d.text();
          return false;
        }
      }
    }
    detail = std::to_string(checked) + " diagrams, engine == representation oracle";
    return true;
  }});

  out.push_back({4, "intersection-graph invariance", [](ShareSpace& space, std::string& detail) {
    int classes = 0, diagrams = 0;
    for (int n = 0; n <= 6; ++n) {
      std::map<uint64_t, PolyC> by_graph;
      for (const auto& d : enumerate_diagrams(n)) {
        ++diagrams;
        uint64_t key = graph_canon(intersection_graph(d));
        PolyC v = space.engine().wsl2_diagram(d);
        auto [it, fresh] = by_graph.emplace(key, v);
        if (fresh) {
          ++classes;
        } else if (!(it->second == v)) {
          detail = "two diagrams with one intersection graph differ: " + d.text();
          return false;
        }
      }
    }
    detail = std::to_string(diagrams) + " diagrams in " + std::to_string(classes) +
             " graph classes, values constant on classes";
    return true;
  }});

  out.push_back({5, "four-term vanishing", [](ShareSpace& space, std::string& detail) {
    std::mt19937 rng(20240915u);
    auto rand_int = [&](int lo, int hi) {
      return lo + int(rng() % unsigned(hi - lo + 1));
    };
    for (int trial = 0; trial < 200; ++trial) {
      int chords = rand_int(2, 4);  // plus the moving chord: at most 5
      // random share on `chords` chords
      int slots = 2 * chords;
      std::vector<int> perm(static_cast<size_t>(slots));
      for (int i = 0; i < slots; ++i) perm[size_t(i)] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      int split = rand_int(0, slots);
      std::vector<int> flat(static_cast<size_t>(slots));
      for (int chord = 0; chord < chords; ++chord) {
        flat[size_t(perm[size_t(2 * chord)])] = chord + 1;
        flat[size_t(perm[size_t(2 * chord + 1)])] = chord + 1;
      }
      Share base;
      base.strand1.assign(flat.begin(), flat.begin() + split);
      base.strand2.assign(flat.begin() + split, flat.end());
      // fixed end of the moving chord
      int moving = chords + 1;
      int fs = rand_int(0, 1);
      auto& fw = fs == 0 ? base.strand1 : base.strand2;
      fw.insert(fw.begin() + rand_int(0, int(fw.size())), moving);
      // ends of the anchor chord
      int anchor = rand_int(1, chords);
      std::vector<std::pair<int, int>> ends;
      for (int st = 0; st < 2; ++st) {
        const auto& w = st == 0 ? base.strand1 : base.strand2;
        for (int i = 0; i < int(w.size()); ++i)
          if (w[size_t(i)] == anchor) ends.push_back({st, i});
      }
      PolyC1C2X total;
      int sign = 1;
      for (auto [st, p] : ends) {
        for (int offset = 0; offset < 2; ++offset) {
          Share variant = base;
          auto& w = st == 0 ? variant.strand1 : variant.strand2;
          w.insert(w.begin() + p + offset, moving);
          PolyC1C2X nf = space.engine().normal_form(variant);
          total += offset == 0 ? nf.scaled(Rational(sign)) : nf.scaled(Rational(-sign));
        }
      }
      if (!total.is_zero()) {
        detail = "nonzero four-term combination at trial " + std::to_string(trial);
        return false;
      }
    }
    detail = "200 randomized four-term combinations reduce to 0";
    return true;
  }});

  out.push_back({6, "operator identities", [](ShareSpace& space, std::string& detail) {
    const int N = 8, big = N + 4;
    for (Basis basis : {Basis::Y, Basis::P, Basis::E}) {
      PolyMatrix U = pm_from(space.operator_matrix(ChordOp::U, basis, big));
      PolyMatrix X = pm_from(space.operator_matrix(ChordOp::X, basis, big));
      PolyMatrix Y = pm_from(space.operator_matrix(ChordOp::Y, basis, big));
      PolyMatrix cI = pm_scalar(PolyC::variable(), big);
      PolyMatrix I = pm_scalar(PolyC::constant(Rational(1)), big);
      if (!pm_equal_block(pm_sub(X, Y), pm_sub(U, cI), N)) {
        detail = std::string("X - Y != U - c in basis ") + basis_name(basis);
        return false;
      }
      PolyMatrix ux = pm_sub(pm_mul(U, X), pm_mul(X, U));
      PolyMatrix xy = pm_sub(pm_mul(X, Y), pm_mul(Y, X));
      PolyMatrix uy = pm_sub(pm_mul(U, Y), pm_mul(Y, U));
      if (!pm_equal_block(ux, xy, N) || !pm_equal_block(xy, uy, N)) {
        detail = std::string("commutator chains fail in basis ") + basis_name(basis);
        return false;
      }
      // U Y^2 = (2Y-1) U Y + (2c - Y - Y^2) U - (Y-c)^2
      PolyMatrix lhs = pm_mul(U, pm_mul(Y, Y));
      PolyMatrix two_y_minus_1 = pm_sub(pm_scale(Y, PolyC::constant(Rational(2))), I);
      PolyMatrix mid = pm_sub(pm_sub(pm_scale(cI, PolyC::constant(Rational(2))), Y), pm_mul(Y, Y));
      PolyMatrix y_minus_c = pm_sub(Y, cI);
      PolyMatrix rhs = pm_add(pm_mul(two_y_minus_1, pm_mul(U, Y)),
                              pm_sub(pm_mul(mid, U), pm_mul(y_minus_c, y_minus_c)));
      if (!pm_equal_block(lhs, rhs, N)) {
        detail = std::string("six-term operator relation fails in basis ") + basis_name(basis);
        return false;
      }
    }
    detail = "X-Y=U-c, commutator chains and the UY^2 relation hold at N=8 in y, p, e";
    return true;
  }});

  out.push_back({7, "eigen data", [](ShareSpace& space, std::string& detail) {
    for (int m = 0; m <= 12; ++m) {
      if (!(space.u_column(m)[size_t(m)] == ShareSpace::u_eigenvalue(m))) {
        detail = "u_{m,m} != c - m(m+1)/2 at m=" + std::to_string(m);
        return false;
      }
    }
    SElem one = SElem::one(Basis::Y);
    for (int n = 0; n <= 8; ++n) {
      if (!(space.pairing_by_adjoint(space.e_poly(n), one) == space.e_at_c(n))) {
        detail = "e_n(c) formula fails at n=" + std::to_string(n);
        return false;
      }
      SElem p = space.p_poly(n);
      if (!(space.pairing_by_adjoint(p, p) == space.p_norm(n))) {
        detail = "<p_n,p_n> formula fails at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "u_m (m<=12), e_n(c) and <p_n,p_n> (n<=8) match via the pairing";
    return true;
  }});

  out.push_back({8, "orthogonality and adjointness", [](ShareSpace& space, std::string& detail) {
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j < i; ++j)
        if (!space.pairing(space.p_poly(i), space.p_poly(j)).is_zero()) {
          detail = "<p_i,p_j> != 0 at (" + std::to_string(i) + "," + std::to_string(j) + ")";
          return false;
        }
    const int N = 8, big = N + 2;
    PolyMatrix G(static_cast<size_t>(big), std::vector<PolyC>(static_cast<size_t>(big)));
    for (int i = 0; i < big; ++i)
      for (int j = 0; j < big; ++j)
        G[size_t(j)][size_t(i)] = space.pairing(SElem::unit(Basis::Y, i), SElem::unit(Basis::Y, j));
    PolyMatrix U = pm_from(space.operator_matrix(ChordOp::U, Basis::Y, big));
    PolyMatrix X = pm_from(space.operator_matrix(ChordOp::X, Basis::Y, big));
    PolyMatrix Y = pm_from(space.operator_matrix(ChordOp::Y, Basis::Y, big));
    if (!pm_equal_block(pm_mul(pm_transpose(Y), G), pm_mul(G, U), N)) {
      detail = "Y is not adjoint to U under the Gram matrix";
      return false;
    }
    if (!pm_equal_block(pm_mul(pm_transpose(X), G), pm_mul(G, X), N)) {
      detail = "X is not self-adjoint under the Gram matrix";
      return false;
    }
    detail = "p-basis orthogonal (n<=8); Gram adjointness at N=8";
    return true;
  }});

  out.push_back({9, "complete bipartite reproduction", [](ShareSpace& space, std::string& detail) {
    RSeries expected = k3n_series();
    if (!(graph_rseries(space, discrete_graph(3)) == expected)) {
      detail = "discrete_3 series differs from the K_{3,n} residues";
      return false;
    }
    if (!(graph_rseries(space, complete_graph(3)) == dual_rseries(expected, 3))) {
      detail = "K_3 series differs from the split-side residues";
      return false;
    }
    detail = "joins of discrete_3 and K_3 reproduce both residue families";
    return true;
  }});

  out.push_back({10, "duality theorem", [](ShareSpace& space, std::string& detail) {
    int graphs = 0;
    for (int n = 1; n <= 6; ++n) {
      for (const auto& g : permutation_graphs(n)) {
        ++graphs;
        DualityReport rep = verify_duality(space, g);
        if (!rep.realizable || !rep.pass) {
          detail = "duality fails on " + g.text();
          return false;
        }
      }
    }
    RSeries bull = graph_rseries(space, bull_graph());
    if (!(bull == bull_series())) {
      detail = "bull graph residues differ from the published values";
      return false;
    }
    for (const auto& [k, r] : bull.terms)
      if (k % 2 == 0) {
        detail = "bull graph has a nonzero even residue";
        return false;
      }
    detail = std::to_string(graphs) + " permutation graphs pass; bull residues reproduced";
    return true;
  }});

  out.push_back({11, "complete graphs", [](ShareSpace& space, std::string& detail) {
    for (int m = 0; m <= 6; ++m) {
      if (!(k_complete(space, m) == space.engine().wsl2_diagram(complete_graph_diagram(m)))) {
        detail = "K_m formula differs from the rewrite engine at m=" + std::to_string(m);
        return false;
      }
    }
    detail = "K_m formula == engine value for m<=6";
    return true;
  }});

  out.push_back({12, "C5 reconstruction", [](ShareSpace& space, std::string& detail) {
    SElem got = reconstruct_selem(space, c5_join_series());
    if (!(got == c5_expected())) {
      detail = "reconstructed element differs";
      return false;
    }
    detail = "join series reconstructs the published C5 polynomial";
    return true;
  }});

  out.push_back({13, "realizability", [](ShareSpace& space, std::string& detail) {
    auto obstructions = circle_obstructions();
    for (const auto& g : obstructions) {
      if (realize_circle(g, 8)) {
        detail = "an obstruction graph was realized: " + g.text();
        return false;
      }
    }
    if (realize_permutation(cycle_graph(5))) {
      detail = "C5 was realized by an arch-free share";
      return false;
    }
    DualityReport rep = verify_duality(space, cycle_graph(5));
    if (rep.realizable) {
      detail = "verify_duality(C5) did not take the not-realizable path";
      return false;
    }
    detail = "three obstructions unrealizable on the circle; C5 not a permutation graph";
    return true;
  }});

  return out;
}

}  // namespace

bool run_sweep(ShareSpace& space, const std::function<void(const CriterionResult&)>& report) {
  bool all = true;
  for (const auto& crit : criteria()) {
    CriterionResult res;
    res.id = crit.id;
    res.name = crit.name;
    auto start = std::chrono::steady_clock::now();
    try {
      res.pass = crit.run(space, res.detail);
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && res.pass;
    if (report) report(res);
  }
  return all;
}

}  // namespace sl2w
