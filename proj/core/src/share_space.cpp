#include <sl2w/share_space.hpp>

#include <sl2w/series.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sl2w {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::X: return "x";
    case Basis::Y: return "y";
    case Basis::P: return "p";
    case Basis::E: return "e";
  }
  return "?";
}

const char* op_name(ChordOp op) {
  switch (op) {
    case ChordOp::U: return "U";
    case ChordOp::X: return "X";
    case ChordOp::Y: return "Y";
  }
  return "?";
}

Basis parse_basis(std::string_view s) {
  if (s == "x" || s == "X") return Basis::X;
  if (s == "y" || s == "Y") return Basis::Y;
  if (s == "p" || s == "P") return Basis::P;
  if (s == "e" || s == "E") return Basis::E;
  throw InputError("unknown basis '" + std::string(s) + "'");
}

ChordOp parse_op(std::string_view s) {
  if (s == "U" || s == "u") return ChordOp::U;
  if (s == "X" || s == "x") return ChordOp::X;
  if (s == "Y" || s == "y") return ChordOp::Y;
  throw InputError("unknown operator '" + std::string(s) + "'");
}

SElem::SElem(Basis b, std::vector<PolyC> c) : basis(b), coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

SElem SElem::unit(Basis b, int degree) {
  std::vector<PolyC> c(size_t(degree) + 1);
  c.back() = PolyC::constant(Rational(1));
  return SElem(b, std::move(c));
}

PolyC SElem::coeff(int k) const {
  if (k < 0 || k >= int(coeffs.size())) return PolyC();
  return coeffs[size_t(k)];
}

PolyC OperatorMatrix::entry(int row, int col) const {
  if (col < 0 || col >= int(columns.size())) return PolyC();
  const auto& c = columns[size_t(col)];
  if (row < 0 || row >= int(c.size())) return PolyC();
  return c[size_t(row)];
}

PolyMatrix pm_from(const OperatorMatrix& m) { return m.columns; }

PolyMatrix pm_scalar(const PolyC& value, int size) {
  PolyMatrix out(static_cast<size_t>(size), std::vector<PolyC>(static_cast<size_t>(size)));
  for (int i = 0; i < size; ++i) out[size_t(i)][size_t(i)] = value;
  return out;
}

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) {
  size_t n = a.size();
  PolyMatrix out(n, std::vector<PolyC>(n));
  for (size_t col = 0; col < n; ++col)
    for (size_t k = 0; k < n; ++k) {
      const PolyC& bk = b[col][k];
      if (bk.is_zero()) continue;
      for (size_t row = 0; row < n; ++row) {
        const PolyC& ark = a[k][row];
        if (!ark.is_zero()) out[col][row] += ark * bk;
      }
    }
  return out;
}

PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out = a;
  for (size_t col = 0; col < out.size(); ++col)
    for (size_t row = 0; row < out[col].size(); ++row) out[col][row] += b[col][row];
  return out;
}

PolyMatrix pm_sub(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out = a;
  for (size_t col = 0; col < out.size(); ++col)
    for (size_t row = 0; row < out[col].size(); ++row) out[col][row] -= b[col][row];
  return out;
}

PolyMatrix pm_scale(const PolyMatrix& a, const PolyC& s) {
  PolyMatrix out = a;
  for (auto& col : out)
    for (auto& v : col) v = v * s;
  return out;
}

PolyMatrix pm_transpose(const PolyMatrix& a) {
  size_t n = a.size();
  PolyMatrix out(n, std::vector<PolyC>(n));
  for (size_t col = 0; col < n; ++col)
    for (size_t row = 0; row < n; ++row) out[row][col] = a[col][row];
  return out;
}

bool pm_equal_block(const PolyMatrix& a, const PolyMatrix& b, int size) {
  for (int col = 0; col < size; ++col)
    for (int row = 0; row < size; ++row)
      if (!(a[size_t(col)][size_t(row)] == b[size_t(col)][size_t(row)])) return false;
  return true;
}

// ---- primitive sources ----

void ShareSpace::ensure_u_columns(int m) {
  if (int(u_cols_.size()) > m) return;
  SeriesCoeffs sc = expand_rational_series(u_series_numerator(), u_series_denominator(), m);
  u_cols_.clear();
  for (int k = 0; k <= m; ++k) {
    const PolyCY& col = sc.coeffs[size_t(k)];
    if (col.degree() > k)
      throw std::logic_error("U(y^m) escapes the bridge filtration");
    std::vector<PolyC> out(size_t(k) + 1);
    for (int i = 0; i <= k; ++i) out[size_t(i)] = col.coeff(i);
    u_cols_.push_back(std::move(out));
  }
}

std::vector<PolyC> ShareSpace::u_column(int m) {
  if (m < 0) throw InputError("u_column: negative index");
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_u_columns(m);
  return u_cols_[size_t(m)];
}

PolyC ShareSpace::u_eigenvalue(int m) {
  return PolyC({Rational(-m) * Rational(m + 1) / 2, Rational(1)});
}

void ShareSpace::ensure_e_polys(int n) {
  if (e_polys_.empty()) {
    e_polys_.push_back(PolyCY::constant(PolyC::constant(Rational(1))));
    e_polys_.push_back(PolyCY::variable());
  }
  while (int(e_polys_.size()) <= n) {
    int k = int(e_polys_.size()) - 1;  // building e_{k+1}
    PolyC kappa = PolyC::c_minus(Rational(k * k - 1) / 4);
    kappa = (kappa * kappa).scaled(Rational(k * k) / Rational(4 * k * k - 1));
    PolyCY head = (PolyCY::variable() -
                   PolyCY::constant(PolyC::constant(Rational(k) * Rational(k + 1) / 4))) *
                  e_polys_[size_t(k)];
    e_polys_.push_back(head - e_polys_[size_t(k) - 1].scaled(kappa));
  }
}

SElem ShareSpace::e_poly(int n) {
  if (n < 0) throw InputError("e_poly: negative index");
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_e_polys(n);
  return SElem(Basis::Y, e_polys_[size_t(n)].coeffs());
}

SElem ShareSpace::p_poly(int n) {
  if (n < 0) throw InputError("p_poly: negative index");
  PolyCY p = PolyCY::constant(PolyC::constant(Rational(1)));
  for (int m = 0; m < n; ++m)
    p = p * (PolyCY::variable() - PolyCY::constant(u_eigenvalue(m)));
  return SElem(Basis::Y, p.coeffs());
}

PolyC ShareSpace::e_at_c(int n) {
  Rational lead(1);
  for (int k = 1; k <= n; ++k) lead *= Rational(k) / Rational(2 * k - 1);
  PolyC out = PolyC::constant(lead);
  for (int m = 1; m <= n; ++m) out = out * PolyC::c_minus(Rational(m * m - 1) / 4);
  return out;
}

PolyC ShareSpace::p_norm(int n) {
  Rational lead(n % 2 == 0 ? 1 : -1);
  for (int k = 1; k <= n; ++k) lead *= Rational(k) * Rational(k);
  PolyC out = PolyC::constant(lead);
  for (int m = 1; m <= n; ++m) out = out * PolyC::c_minus(Rational(m * m - 1) / 4);
  return out;
}

// ---- transitions ----

void ShareSpace::ensure_transitions(int m) {
  while (int(y_in_x_.size()) <= m) {
    int k = int(y_in_x_.size());
    PolyCY in_x = engine_.wsl2_share_in_x(all_crossing_share(k));
    if (in_x.degree() != k || !(in_x.coeff(k) == PolyC::constant(Rational(1))))
      throw std::logic_error("y^m transition is not unitriangular");
    std::vector<PolyC> col(size_t(k) + 1);
    for (int i = 0; i <= k; ++i) col[size_t(i)] = in_x.coeff(i);
    y_in_x_.push_back(col);

    // x^k = y^k - sum_{i<k} T[i][k] * (x^i in y)
    std::vector<PolyC> xy(size_t(k) + 1);
    xy[size_t(k)] = PolyC::constant(Rational(1));
    for (int i = 0; i < k; ++i) {
      const PolyC& t = col[size_t(i)];
      if (t.is_zero()) continue;
      for (int r = 0; r <= i; ++r) xy[size_t(r)] -= t * x_in_y_[size_t(i)][size_t(r)];
    }
    x_in_y_.push_back(std::move(xy));
  }
}

std::vector<PolyC> ShareSpace::y_in_x_column(int m) {
  if (m < 0) throw InputError("negative index");
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_transitions(m);
  return y_in_x_[size_t(m)];
}

std::vector<PolyC> ShareSpace::x_in_y_column(int m) {
  if (m < 0) throw InputError("negative index");
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_transitions(m);
  return x_in_y_[size_t(m)];
}

namespace {

// back-substitution against a monic (in the top coefficient) family
std::vector<PolyC> decompose_monic(std::vector<PolyC> v,
                                   const std::function<std::vector<PolyC>(int)>& family) {
  std::vector<PolyC> coords(v.size());
  for (int d = int(v.size()) - 1; d >= 0; --d) {
    PolyC a = v[size_t(d)];
    coords[size_t(d)] = a;
    if (a.is_zero()) continue;
    std::vector<PolyC> fam = family(d);
    for (int r = 0; r <= d; ++r) v[size_t(r)] -= a * fam[size_t(r)];
    if (!v[size_t(d)].is_zero()) throw std::logic_error("family not monic");
  }
  return coords;
}

std::vector<PolyC> combine(const std::vector<PolyC>& coords,
                           const std::function<std::vector<PolyC>(int)>& family) {
  std::vector<PolyC> out(coords.size());
  for (int m = 0; m < int(coords.size()); ++m) {
    if (coords[size_t(m)].is_zero()) continue;
    std::vector<PolyC> fam = family(m);
    for (int r = 0; r <= m; ++r) out[size_t(r)] += coords[size_t(m)] * fam[size_t(r)];
  }
  return out;
}

}  // namespace

SElem ShareSpace::basis_convert(const SElem& v, Basis target) {
  if (v.basis == target || v.is_zero()) return SElem(target, v.coeffs);
  auto e_family = [this](int m) { return e_poly(m).coeffs; };
  auto p_family = [this](int m) { return p_poly(m).coeffs; };
  auto x_family = [this](int m) { return x_in_y_column(m); };

  // to Y
  std::vector<PolyC> y;
  switch (v.basis) {
    case Basis::Y: y = v.coeffs; break;
    case Basis::E: y = combine(v.coeffs, e_family); break;
    case Basis::P: y = combine(v.coeffs, p_family); break;
    case Basis::X: y = combine(v.coeffs, x_family); break;
  }
  if (target == Basis::Y) return SElem(Basis::Y, std::move(y));
  switch (target) {
    case Basis::E: return SElem(Basis::E, decompose_monic(std::move(y), e_family));
    case Basis::P: return SElem(Basis::P, decompose_monic(std::move(y), p_family));
    case Basis::X: {
      auto yx_family = [this](int m) { return y_in_x_column(m); };
      // write v (known in y coords) in x coords: decompose against y^m-in-x
      // by viewing the transition the other way: x coords = T * y coords.
      std::vector<PolyC> x(y.size());
      for (int m = 0; m < int(y.size()); ++m) {
        if (y[size_t(m)].is_zero()) continue;
        auto col = yx_family(m);
        for (int r = 0; r <= m; ++r) x[size_t(r)] += y[size_t(m)] * col[size_t(r)];
      }
      return SElem(Basis::X, std::move(x));
    }
    default: break;
  }
  throw std::logic_error("unreachable basis");
}

PolyCY ShareSpace::elem_as_y_poly(const SElem& v_in_y) const {
  return PolyCY(v_in_y.coeffs);
}

SElem ShareSpace::apply(ChordOp op, const SElem& v) {
  SElem y = basis_convert(v, Basis::Y);
  std::vector<PolyC> out(y.coeffs.size() + 1);
  const PolyC c = PolyC::variable();
  for (int m = 0; m < int(y.coeffs.size()); ++m) {
    const PolyC& a = y.coeffs[size_t(m)];
    if (a.is_zero()) continue;
    if (op == ChordOp::Y || op == ChordOp::X) out[size_t(m) + 1] += a;  // the y shift
    if (op == ChordOp::U || op == ChordOp::X) {
      std::vector<PolyC> ucol = u_column(m);
      for (int i = 0; i <= m; ++i) out[size_t(i)] += a * ucol[size_t(i)];
    }
    if (op == ChordOp::X) out[size_t(m)] -= c * a;  // X = Y + U - c
  }
  return basis_convert(SElem(Basis::Y, std::move(out)), v.basis);
}

OperatorMatrix ShareSpace::operator_matrix(ChordOp op, Basis basis, int size) {
  if (size < 1) throw InputError("operator_matrix: size must be positive");
  OperatorMatrix M;
  M.op = op;
  M.basis = basis;
  M.size = size;
  M.columns.resize(size_t(size));

  auto set_col = [&](int m, std::vector<std::pair<int, PolyC>> entries) {
    std::vector<PolyC> col(static_cast<size_t>(size));
    for (auto& [row, p] : entries)
      if (row >= 0 && row < size) col[size_t(row)] += p;
    M.columns[size_t(m)] = std::move(col);
  };

  const PolyC one = PolyC::constant(Rational(1));
  for (int m = 0; m < size; ++m) {
    if (basis == Basis::Y) {
      if (op == ChordOp::Y) {
        set_col(m, {{m + 1, one}});
      } else {
        auto ucol = u_column(m);
        std::vector<std::pair<int, PolyC>> entries;
        for (int i = 0; i <= m; ++i) entries.push_back({i, ucol[size_t(i)]});
        if (op == ChordOp::X) {
          entries.push_back({m + 1, one});
          entries.push_back({m, -PolyC::variable()});
        }
        set_col(m, std::move(entries));
      }
    } else if (basis == Basis::P) {
      // three-term forms in the orthogonal basis
      PolyC beta = PolyC::c_minus(Rational(m * m - 1) / 4).scaled(Rational(m * m));
      switch (op) {
        case ChordOp::X:
          set_col(m, {{m + 1, one}, {m, PolyC::c_minus(Rational(m) * Rational(m + 1))}, {m - 1, -beta}});
          break;
        case ChordOp::Y:
          set_col(m, {{m + 1, one}, {m, u_eigenvalue(m)}});
          break;
        case ChordOp::U:
          set_col(m, {{m, u_eigenvalue(m)}, {m - 1, -beta}});
          break;
      }
    } else if (basis == Basis::E) {
      PolyC kappa = PolyC::c_minus(Rational(m * m - 1) / 4);
      kappa = (kappa * kappa).scaled(Rational(m * m) / Rational(4 * m * m - 1));
      PolyC half = PolyC::constant(Rational(m) * Rational(m + 1) / 4);
      switch (op) {
        case ChordOp::Y:
          set_col(m, {{m + 1, one}, {m, half}, {m - 1, kappa}});
          break;
        case ChordOp::X:
          set_col(m, {{m + 1, one}, {m, -half}, {m - 1, kappa}});
          break;
        case ChordOp::U:
          set_col(m, {{m, u_eigenvalue(m)}});
          break;
      }
    } else {
      // X basis by conjugation with the engine-computed transition
      SElem img = apply(op, SElem::unit(Basis::X, m));
      std::vector<std::pair<int, PolyC>> entries;
      for (int r = 0; r < int(img.coeffs.size()); ++r) entries.push_back({r, img.coeffs[size_t(r)]});
      set_col(m, std::move(entries));
    }
  }
  return M;
}

PolyC ShareSpace::pairing(const SElem& a, const SElem& b) {
  SElem ay = basis_convert(a, Basis::Y);
  SElem be = basis_convert(b, Basis::E);
  PolyCY ap = elem_as_y_poly(ay);
  PolyC out;
  for (int n = 0; n < int(be.coeffs.size()); ++n) {
    const PolyC& bn = be.coeffs[size_t(n)];
    if (bn.is_zero()) continue;
    out += bn * ap.evaluate_y(u_eigenvalue(n)) * e_at_c(n);
  }
  return out;
}

PolyC ShareSpace::pairing_by_adjoint(const SElem& a, const SElem& b) {
  SElem ay = basis_convert(a, Basis::Y);
  SElem by = basis_convert(b, Basis::Y);
  PolyC out;
  SElem powered = ay;  // U^n a
  const PolyC cvar = PolyC::variable();
  for (int n = 0; n < int(by.coeffs.size()); ++n) {
    const PolyC& bn = by.coeffs[size_t(n)];
    if (!bn.is_zero()) out += bn * elem_as_y_poly(powered).evaluate_y(cvar);
    if (n + 1 < int(by.coeffs.size())) powered = apply(ChordOp::U, powered);
  }
  return out;
}

SElem ShareSpace::sigma(const SElem& v) {
  SElem y = basis_convert(v, Basis::Y);
  std::vector<PolyC> x_coords(y.coeffs.size());
  for (int m = 0; m < int(y.coeffs.size()); ++m)
    x_coords[size_t(m)] = m % 2 == 0 ? y.coeffs[size_t(m)] : -y.coeffs[size_t(m)];
  return basis_convert(SElem(Basis::X, std::move(x_coords)), v.basis);
}

SElem ShareSpace::from_share(const Share& s) {
  PolyCY in_x = engine_.wsl2_share_in_x(s);
  return SElem(Basis::X, in_x.coeffs());
}

}  // namespace sl2w
