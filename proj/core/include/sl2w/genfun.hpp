// Generating functions for join sequences.
//
// For an element I of S, G_I(t) = sum_n <I, y^n> t^n is a finite sum of
// geometric series sum_k r_k(c) / (1 - u_k t). RSeries holds the residues
// r_k; the rational function itself is never materialized (the poles u_k are
// known a priori).
#pragma once

#include <sl2w/share_space.hpp>

#include <map>

namespace sl2w {

struct RSeries {
  std::map<int, PolyC> terms;  // k -> r_k, zero entries omitted

  void set(int k, PolyC r);
  PolyC at(int k) const;
  int max_k() const { return terms.empty() ? -1 : terms.rbegin()->first; }
  bool operator==(const RSeries&) const = default;
};

// r_k = a_k e_k(c) for the eigenbasis decomposition v = sum a_k e_k.
RSeries gen_series(ShareSpace& space, const SElem& v);

// sum_k r_k u_k^n = <v, y^n>.
PolyC series_values(ShareSpace& space, const SElem& v, int n);

// Duality: r_k -> (-1)^{vcount-k} r_k.
RSeries dual_rseries(const RSeries& r, int vcount);

// Complete bipartite series CB_m (joins of the discrete m graph), by the
// recurrence CB_m = (c^m + t sum_{i<m} u_{i,m} CB_i) / (1 - u_m t), unrolled
// with the partial fraction t/((1-u_j t)(1-u_m t)).
RSeries cb_series(ShareSpace& space, int m);

// Complete split graph series (K_m, n), by the mirrored recurrence with
// signs (-1)^{m-i} and constant term w(K_m).
RSeries split_series(ShareSpace& space, int m);

// Value of the weight system on the complete graph K_m:
//   c^m - 2 sum_{i<m} sum_{j<=i, m-j odd} u_{i,m} r_i^{(j)} / (u_j - u_m).
PolyC k_complete(ShareSpace& space, int m);

// Inverse of gen_series: requires each r_k to be exactly divisible by
// e_k(c); throws InputError otherwise. Result in the Y basis.
SElem reconstruct_selem(ShareSpace& space, const RSeries& r);

}  // namespace sl2w
