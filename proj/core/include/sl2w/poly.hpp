// Polynomial rings used throughout: C[c], C[c][y] and C[c1,c2,x].
//
// PolyC and PolyCY are dense with ascending coefficients and no trailing
// zeros, so equality is structural. PolyC1C2X is a sparse monomial map.
#pragma once

#include <sl2w/rational.hpp>

#include <compare>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace sl2w {

// Univariate polynomial in c over Rational.
class PolyC {
 public:
  // degree() of the zero polynomial.
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  PolyC() = default;
  explicit PolyC(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static PolyC constant(Rational q);
  static PolyC variable();  // c
  // c - a
  static PolyC c_minus(const Rational& a);

  int degree() const { return coeffs_.empty() ? kMinusInfinity : int(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  PolyC& operator+=(const PolyC& o);
  PolyC& operator-=(const PolyC& o);
  friend PolyC operator+(PolyC a, const PolyC& b) { return a += b; }
  friend PolyC operator-(PolyC a, const PolyC& b) { return a -= b; }
  friend PolyC operator*(const PolyC& a, const PolyC& b);
  PolyC operator-() const;
  PolyC scaled(const Rational& s) const;

  Rational evaluate(const Rational& v) const;
  // Substitutes another polynomial for c.
  PolyC compose(const PolyC& inner) const;

  // Exact division; throws InputError if the remainder is nonzero.
  PolyC divide_exact(const PolyC& divisor) const;

  bool operator==(const PolyC&) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;  // ascending powers of c
};

// Polynomial in a second variable (y or x, depending on the enclosing basis
// tag) with PolyC coefficients.
class PolyCY {
 public:
  PolyCY() = default;
  explicit PolyCY(std::vector<PolyC> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static PolyCY constant(PolyC p);
  static PolyCY variable();  // y

  int degree() const { return coeffs_.empty() ? PolyC::kMinusInfinity : int(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<PolyC>& coeffs() const { return coeffs_; }
  PolyC coeff(int k) const;

  PolyCY& operator+=(const PolyCY& o);
  PolyCY& operator-=(const PolyCY& o);
  friend PolyCY operator+(PolyCY a, const PolyCY& b) { return a += b; }
  friend PolyCY operator-(PolyCY a, const PolyCY& b) { return a -= b; }
  friend PolyCY operator*(const PolyCY& a, const PolyCY& b);
  PolyCY scaled(const Rational& s) const;
  PolyCY scaled(const PolyC& s) const;

  // Substitutes a PolyC for the second variable; collapses into C[c].
  PolyC evaluate_y(const PolyC& v) const;

  bool operator==(const PolyCY&) const = default;

 private:
  void trim();
  std::vector<PolyC> coeffs_;
};

// Monomial c1^a c2^b x^n.
struct MonomialC1C2X {
  int c1 = 0;
  int c2 = 0;
  int x = 0;
  auto operator<=>(const MonomialC1C2X&) const = default;
};

// Sparse trivariate polynomial in c1, c2, x: the value ring of the weight
// system on two-strand diagrams before the c1 = c2 = c substitution.
class PolyC1C2X {
 public:
  PolyC1C2X() = default;

  static PolyC1C2X one();
  static PolyC1C2X monomial(MonomialC1C2X m, Rational q = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<MonomialC1C2X, Rational>& terms() const { return terms_; }

  void add_term(const MonomialC1C2X& m, const Rational& q);
  PolyC1C2X& operator+=(const PolyC1C2X& o);
  PolyC1C2X& operator-=(const PolyC1C2X& o);
  friend PolyC1C2X operator+(PolyC1C2X a, const PolyC1C2X& b) { return a += b; }
  friend PolyC1C2X operator-(PolyC1C2X a, const PolyC1C2X& b) { return a -= b; }
  friend PolyC1C2X operator*(const PolyC1C2X& a, const PolyC1C2X& b);
  PolyC1C2X scaled(const Rational& s) const;

  // Multiplies by c1 (strand == 0) or c2 (strand == 1).
  PolyC1C2X shifted_c(int strand, int amount = 1) const;

  // Swaps the roles of c1 and c2.
  PolyC1C2X swap_c1c2() const;

  // The quotient map c1 = c2 = c; coefficients of x^n as PolyC.
  PolyCY collapse_c() const;

  int degree_c1() const;
  int degree_c2() const;
  int degree_x() const;

  bool operator==(const PolyC1C2X&) const = default;

 private:
  std::map<MonomialC1C2X, Rational> terms_;  // no zero entries
};

}  // namespace sl2w
