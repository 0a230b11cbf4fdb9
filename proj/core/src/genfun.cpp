#include <sl2w/genfun.hpp>

namespace sl2w {

void RSeries::set(int k, PolyC r) {
  if (r.is_zero())
    terms.erase(k);
  else
    terms[k] = std::move(r);
}

PolyC RSeries::at(int k) const {
  auto it = terms.find(k);
  return it == terms.end() ? PolyC() : it->second;
}

RSeries gen_series(ShareSpace& space, const SElem& v) {
  SElem e = space.basis_convert(v, Basis::E);
  RSeries out;
  for (int k = 0; k < int(e.coeffs.size()); ++k)
    out.set(k, e.coeffs[size_t(k)] * space.e_at_c(k));
  return out;
}

PolyC series_values(ShareSpace& space, const SElem& v, int n) {
  if (n < 0) throw InputError("series_values: negative index");
  RSeries r = gen_series(space, v);
  PolyC out;
  for (const auto& [k, rk] : r.terms) {
    PolyC u = ShareSpace::u_eigenvalue(k);
    PolyC p = PolyC::constant(Rational(1));
    for (int i = 0; i < n; ++i) p = p * u;
    out += rk * p;
  }
  return out;
}

RSeries dual_rseries(const RSeries& r, int vcount) {
  if (vcount < r.max_k()) throw InputError("dual_rseries: vcount below top index");
  RSeries out;
  for (const auto& [k, rk] : r.terms)
    out.set(k, (vcount - k) % 2 == 0 ? rk : -rk);
  return out;
}

namespace {

// residue tables r_i^{(j)} for CB_0..CB_m
std::vector<RSeries> cb_table(ShareSpace& space, int m) {
  std::vector<RSeries> cb;
  RSeries base;
  base.set(0, PolyC::constant(Rational(1)));
  cb.push_back(base);
  for (int k = 1; k <= m; ++k) {
    auto ucol = space.u_column(k);
    RSeries next;
    PolyC at_k;  // accumulates the residue at the new pole u_k
    {
      PolyC cm = PolyC::constant(Rational(1));
      for (int i = 0; i < k; ++i) cm = cm * PolyC::variable();
      at_k = cm;
    }
    for (int i = 0; i < k; ++i) {
      const PolyC& uik = ucol[size_t(i)];
      if (uik.is_zero()) continue;
      for (const auto& [j, rij] : cb[size_t(i)].terms) {
        Rational gap = Rational(k * (k + 1) - j * (j + 1)) / 2;  // u_j - u_k
        PolyC share = (uik * rij).scaled(1 / gap);
        next.set(j, next.at(j) + share);
        at_k -= share;
      }
    }
    next.set(k, next.at(k) + at_k);
    cb.push_back(std::move(next));
  }
  return cb;
}

}  // namespace

RSeries cb_series(ShareSpace& space, int m) {
  if (m < 0) throw InputError("cb_series: negative index");
  return cb_table(space, m).back();
}

PolyC k_complete(ShareSpace& space, int m) {
  if (m < 0) throw InputError("k_complete: negative index");
  auto cb = cb_table(space, m);
  PolyC out = PolyC::constant(Rational(1));
  for (int i = 0; i < m; ++i) out = out * PolyC::variable();
  if (m == 0) return out;
  auto ucol = space.u_column(m);
  PolyC sum;
  for (int i = 0; i < m; ++i) {
    const PolyC& uim = ucol[size_t(i)];
    if (uim.is_zero()) continue;
    for (const auto& [j, rij] : cb[size_t(i)].terms) {
      if ((m - j) % 2 == 0) continue;
      Rational gap = Rational(m * (m + 1) - j * (j + 1)) / 2;  // u_j - u_m
      sum += (uim * rij).scaled(1 / gap);
    }
  }
  return out - sum.scaled(Rational(2));
}

RSeries split_series(ShareSpace& space, int m) {
  if (m < 0) throw InputError("split_series: negative index");
  std::vector<RSeries> split;
  RSeries base;
  base.set(0, PolyC::constant(Rational(1)));
  split.push_back(base);
  for (int k = 1; k <= m; ++k) {
    auto ucol = space.u_column(k);
    RSeries next;
    PolyC at_k = k_complete(space, k);
    for (int i = 0; i < k; ++i) {
      PolyC uik = ucol[size_t(i)];
      if (uik.is_zero()) continue;
      if ((k - i) % 2 != 0) uik = -uik;
      for (const auto& [j, rij] : split[size_t(i)].terms) {
        Rational gap = Rational(k * (k + 1) - j * (j + 1)) / 2;
        PolyC share = (uik * rij).scaled(1 / gap);
        next.set(j, next.at(j) + share);
        at_k -= share;
      }
    }
    next.set(k, next.at(k) + at_k);
    split.push_back(std::move(next));
  }
  return split.back();
}

SElem reconstruct_selem(ShareSpace& space, const RSeries& r) {
  SElem out(Basis::Y, {});
  for (const auto& [k, rk] : r.terms) {
    PolyC ak = rk.divide_exact(space.e_at_c(k));  // throws on non-divisibility
    SElem ek = space.e_poly(k);
    std::vector<PolyC> add(size_t(k) + 1);
    for (int i = 0; i <= k; ++i) add[size_t(i)] = ak * ek.coeffs[size_t(i)];
    SElem term(Basis::Y, std::move(add));
    if (out.coeffs.size() < term.coeffs.size()) out.coeffs.resize(term.coeffs.size());
    for (size_t i = 0; i < term.coeffs.size(); ++i) out.coeffs[i] += term.coeffs[i];
  }
  return SElem(Basis::Y, std::move(out.coeffs));
}

}  // namespace sl2w
