#include <sl2w/sl2rep.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace sl2w {

MatQ MatQ::zero(int n) {
  MatQ m;
  m.n = n;
  m.a.assign(size_t(n) * size_t(n), Rational(0));
  return m;
}

MatQ MatQ::identity(int n) {
  MatQ m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ& MatQ::operator+=(const MatQ& o) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
  return *this;
}

MatQ operator*(const MatQ& x, const MatQ& y) {
  MatQ out = MatQ::zero(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const Rational& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) {
        const Rational& w = y.at(k, j);
        if (w != 0) out.at(i, j) += v * w;
      }
    }
  return out;
}

MatQ MatQ::scaled(const Rational& s) const {
  MatQ out = *this;
  for (auto& v : out.a) v *= s;
  return out;
}

bool MatQ::is_scalar(Rational* value) const {
  const Rational& d = at(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? d : Rational(0))) return false;
  if (value) *value = d;
  return true;
}

MatQ kronecker(const MatQ& x, const MatQ& y) {
  MatQ out = MatQ::zero(x.n * y.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      if (x.at(i, j) == 0) continue;
      for (int p = 0; p < y.n; ++p)
        for (int q = 0; q < y.n; ++q)
          if (y.at(p, q) != 0) out.at(i * y.n + p, j * y.n + q) = x.at(i, j) * y.at(p, q);
    }
  return out;
}

IrrepTriple make_irrep(int k) {
  IrrepTriple r;
  r.k = k;
  int n = k + 1;
  r.mat_e = MatQ::zero(n);
  r.mat_f = MatQ::zero(n);
  r.mat_h = MatQ::zero(n);
  for (int j = 0; j <= k; ++j) {
    r.mat_h.at(j, j) = k - 2 * j;
    if (j + 1 <= k) r.mat_f.at(j + 1, j) = 1;
    if (j >= 1) r.mat_e.at(j - 1, j) = Rational(j) * Rational(k - j + 1);
  }
  return r;
}

Rational casimir_value(int k) { return Rational(k) * Rational(k + 2) / 4; }

namespace {

// dual pairs (x_a, x_a^*): (e, f/2), (f, e/2), (h, h/4)
std::array<std::pair<MatQ, MatQ>, 3> dual_pairs(const IrrepTriple& r) {
  Rational half(1, 2), quarter(1, 4);
  return {{{r.mat_e, r.mat_f.scaled(half)},
           {r.mat_f, r.mat_e.scaled(half)},
           {r.mat_h, r.mat_h.scaled(quarter)}}};
}

struct EndRef {
  int strand;  // 0/1; diagrams use strand 0 only
  bool first;  // first occurrence in scan order (strand1 then strand2)
  int chord;   // 0-based
};

std::vector<EndRef> scan_order(const std::vector<int>& s1, const std::vector<int>& s2) {
  std::map<int, int> index;
  std::vector<EndRef> out;
  auto handle = [&](const std::vector<int>& w, int strand) {
    for (int label : w) {
      auto it = index.find(label);
      if (it == index.end()) {
        int id = int(index.size());
        index.emplace(label, id);
        out.push_back({strand, true, id});
      } else {
        out.push_back({strand, false, it->second});
      }
    }
  };
  handle(s1, 0);
  handle(s2, 1);
  return out;
}

// DFS over chord assignments with running strand products.
void assignment_sum(const std::vector<EndRef>& ends, size_t idx, std::vector<int>& choice,
                    const std::array<std::pair<MatQ, MatQ>, 3>& p1,
                    const std::array<std::pair<MatQ, MatQ>, 3>& p2, const MatQ& run1,
                    const MatQ& run2, bool two_strands, MatQ& acc) {
  if (idx == ends.size()) {
    if (two_strands)
      acc += kronecker(run1, run2);
    else
      acc += run1;
    return;
  }
  const EndRef& e = ends[idx];
  const auto& pairs = e.strand == 0 ? p1 : p2;
  if (e.first) {
    for (int a = 0; a < 3; ++a) {
      choice[size_t(e.chord)] = a;
      if (e.strand == 0)
        assignment_sum(ends, idx + 1, choice, p1, p2, run1 * pairs[size_t(a)].first, run2,
                       two_strands, acc);
      else
        assignment_sum(ends, idx + 1, choice, p1, p2, run1, run2 * pairs[size_t(a)].first,
                       two_strands, acc);
    }
  } else {
    int a = choice[size_t(e.chord)];
    if (e.strand == 0)
      assignment_sum(ends, idx + 1, choice, p1, p2, run1 * pairs[size_t(a)].second, run2,
                     two_strands, acc);
    else
      assignment_sum(ends, idx + 1, choice, p1, p2, run1, run2 * pairs[size_t(a)].second,
                     two_strands, acc);
  }
}

}  // namespace

Rational diagram_scalar(const ChordDiagram& d, const IrrepTriple& rep) {
  auto ends = scan_order(d.word, {});
  auto pairs = dual_pairs(rep);
  std::vector<int> choice(size_t(d.chords()), 0);
  MatQ acc = MatQ::zero(rep.k + 1);
  assignment_sum(ends, 0, choice, pairs, pairs, MatQ::identity(rep.k + 1),
                 MatQ::identity(rep.k + 1), false, acc);
  Rational value;
  if (!acc.is_scalar(&value))
    throw std::logic_error("diagram image is not scalar on V_" + std::to_string(rep.k));
  return value;
}

PolyC oracle_wsl2_diagram(const ChordDiagram& d, int max_chords, int k_lo) {
  int n = d.chords();
  if (n > max_chords)
    throw BudgetError("oracle: diagram with " + std::to_string(n) + " chords exceeds budget " +
                      std::to_string(max_chords));
  // nodes c_k = k(k+2)/4, values lambda_k, k = k_lo .. k_lo + n
  std::vector<Rational> nodes, values;
  for (int k = k_lo; k <= k_lo + n; ++k) {
    nodes.push_back(casimir_value(k));
    values.push_back(diagram_scalar(d, make_irrep(k)));
  }
  // Lagrange interpolation
  PolyC out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    PolyC basis = PolyC::constant(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      basis = basis * PolyC::c_minus(nodes[j]);
      denom *= nodes[i] - nodes[j];
    }
    out += basis.scaled(values[i] / denom);
  }
  return out;
}

MatQ bridge_operator(const IrrepTriple& r1, const IrrepTriple& r2) {
  auto p1 = dual_pairs(r1);
  auto p2 = dual_pairs(r2);
  MatQ out = MatQ::zero((r1.k + 1) * (r2.k + 1));
  for (int a = 0; a < 3; ++a) out += kronecker(p1[size_t(a)].first, p2[size_t(a)].second);
  return out;
}

MatQ share_tensor(const Share& s, const IrrepTriple& r1, const IrrepTriple& r2) {
  auto ends = scan_order(s.strand1, s.strand2);
  auto p1 = dual_pairs(r1);
  auto p2 = dual_pairs(r2);
  std::vector<int> choice(size_t(s.chords()), 0);
  MatQ acc = MatQ::zero((r1.k + 1) * (r2.k + 1));
  assignment_sum(ends, 0, choice, p1, p2, MatQ::identity(r1.k + 1), MatQ::identity(r2.k + 1),
                 true, acc);
  return acc;
}

bool oracle_check_nf(const Share& s, const PolyC1C2X& nf,
                     const std::vector<std::pair<int, int>>& reps, int max_chords) {
  if (s.chords() > max_chords)
    throw BudgetError("oracle: share with " + std::to_string(s.chords()) +
                      " chords exceeds budget " + std::to_string(max_chords));
  for (auto [k1, k2] : reps) {
    IrrepTriple r1 = make_irrep(k1), r2 = make_irrep(k2);
    MatQ lhs = share_tensor(s, r1, r2);
    MatQ xop = bridge_operator(r1, r2);
    int dim = (k1 + 1) * (k2 + 1);
    // Horner in x with scalar c1,c2 coefficients
    int dx = nf.degree_x();
    std::vector<Rational> coef(size_t(dx) + 1, Rational(0));
    for (const auto& [m, q] : nf.terms()) {
      Rational v = q;
      for (int i = 0; i < m.c1; ++i) v *= casimir_value(k1);
      for (int i = 0; i < m.c2; ++i) v *= casimir_value(k2);
      coef[size_t(m.x)] += v;
    }
    MatQ rhs = MatQ::zero(dim);
    for (int i = dx; i >= 0; --i) {
      rhs = rhs * xop;
      for (int d = 0; d < dim; ++d) rhs.at(d, d) += coef[size_t(i)];
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> default_rep_pairs(const PolyC1C2X& nf) {
  int d1 = nf.degree_c1(), d2 = nf.degree_c2(), dx = nf.degree_x();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= d1; ++i)
    for (int j = 0; j <= d2; ++j) out.emplace_back(dx + i, dx + j);
  return out;
}

bool verify_separation(int deg_c1, int deg_c2, int deg_x,
                       const std::vector<std::pair<int, int>>& reps) {
  // rows: evaluation points (c1,c2,xi) with xi running over the bridge
  // operator spectrum on V_{k1} (x) V_{k2}; columns: monomials.
  std::vector<std::vector<Rational>> rows;
  for (auto [k1, k2] : reps) {
    Rational c1v = casimir_value(k1), c2v = casimir_value(k2);
    for (int j = std::abs(k1 - k2); j <= k1 + k2; j += 2) {
      Rational xi = (Rational(j) * (j + 2) - Rational(k1) * (k1 + 2) - Rational(k2) * (k2 + 2)) / 8;
      std::vector<Rational> row;
      Rational p1(1);
      for (int a = 0; a <= deg_c1; ++a) {
        Rational p2(1);
        for (int b = 0; b <= deg_c2; ++b) {
          Rational p3(1);
          for (int n = 0; n <= deg_x; ++n) {
            row.push_back(p1 * p2 * p3);
            p3 *= xi;
          }
          p2 *= c2v;
        }
        p1 *= c1v;
      }
      rows.push_back(std::move(row));
    }
  }
  size_t cols = size_t(deg_c1 + 1) * size_t(deg_c2 + 1) * size_t(deg_x + 1);
  // Gaussian elimination rank
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (size_t cidx = col; cidx < cols; ++cidx) rows[r][cidx] -= factor * rows[rank][cidx];
    }
    ++rank;
  }
  return rank == cols;
}

}  // namespace sl2w
