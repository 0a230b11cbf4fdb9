// Independent oracle for the weight system: evaluates diagrams and shares on
// finite dimensional irreducible sl2 representations with exact rational
// arithmetic, and recovers polynomials by Lagrange interpolation at the
// Casimir values k(k+2)/4.
//
// Chords expand over the dual pairs (e, f/2), (f, e/2), (h, h/4) of the form
// <u,v> = 2 tr(uv), which keeps every entry rational. The Casimir in this
// basis is ef - h/2 + h^2/4.
#pragma once

#include <sl2w/diagrams.hpp>
#include <sl2w/poly.hpp>

#include <vector>

namespace sl2w {

struct MatQ {
  int n = 0;
  std::vector<Rational> a;  // row-major

  static MatQ zero(int n);
  static MatQ identity(int n);
  Rational& at(int i, int j) { return a[size_t(i) * size_t(n) + size_t(j)]; }
  const Rational& at(int i, int j) const { return a[size_t(i) * size_t(n) + size_t(j)]; }

  MatQ& operator+=(const MatQ& o);
  friend MatQ operator*(const MatQ& x, const MatQ& y);
  MatQ scaled(const Rational& s) const;
  bool is_scalar(Rational* value = nullptr) const;
  bool operator==(const MatQ&) const = default;
};

MatQ kronecker(const MatQ& x, const MatQ& y);

// Highest weight k, dimension k+1, with [e,f]=h, [h,e]=2e, [h,f]=-2f and
// Casimir acting as k(k+2)/4.
struct IrrepTriple {
  int k = 0;
  MatQ mat_e, mat_f, mat_h;
};

IrrepTriple make_irrep(int k);

// Casimir eigenvalue on V_k.
Rational casimir_value(int k);

// Evaluates the diagram on V_k; throws std::logic_error if the image is not
// scalar (it must be central).
Rational diagram_scalar(const ChordDiagram& d, const IrrepTriple& rep);

// Interpolates diagram values at k = k_lo .. k_lo + n into the unique
// polynomial of degree <= n in c.
PolyC oracle_wsl2_diagram(const ChordDiagram& d, int max_chords = 6, int k_lo = 1);

// Tensor-evaluates the share on V_{k1} (x) V_{k2} and compares against the
// candidate normal form with c1 -> k1(k1+2)/4, c2 -> k2(k2+2)/4 and x -> the
// bridge operator.
bool oracle_check_nf(const Share& s, const PolyC1C2X& nf,
                     const std::vector<std::pair<int, int>>& reps, int max_chords = 8);

// Representation pairs that separate all monomials up to the degrees of nf;
// sufficiency is certified by a full-rank check of the induced evaluation
// matrix (see verify_separation).
std::vector<std::pair<int, int>> default_rep_pairs(const PolyC1C2X& nf);
bool verify_separation(int deg_c1, int deg_c2, int deg_x,
                       const std::vector<std::pair<int, int>>& reps);

// The operator of one bridge on V_{k1} (x) V_{k2}.
MatQ bridge_operator(const IrrepTriple& r1, const IrrepTriple& r2);

MatQ share_tensor(const Share& s, const IrrepTriple& r1, const IrrepTriple& r2);

}  // namespace sl2w
