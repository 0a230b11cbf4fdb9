// The algebra S of shares modulo the weight-system kernel, as a free C[c]
// module with bases {x^n}, {y^n}, {p_n}, {e_n}:
//
//   x^n  parallel bridges          y^n  pairwise crossing bridges
//   p_n = prod_{m<n} (y - u_m)     orthogonal for the join pairing
//   e_n  monic eigenbasis of the arch-adding operator U, U e_n = u_n e_n
//
// with u_m = c - m(m+1)/2. Everything is derived from three primitive
// sources: the generating-function columns of U in the y basis, the
// three-term forms of X and Y in the p basis, and the e recurrence
//
//   e_{n+1} = (y - n(n+1)/4) e_n - n^2/(4n^2-1) (c - (n^2-1)/4)^2 e_{n-1}.
//
// The x<->y transition is computed by the rewrite engine on the pairwise
// crossing shares, never hard-coded. Remaining printed operator forms are
// exercised as tests, not used as inputs.
#pragma once

#include <sl2w/diagrams.hpp>
#include <sl2w/poly.hpp>
#include <sl2w/rewrite.hpp>

#include <mutex>
#include <vector>

namespace sl2w {

enum class Basis : uint8_t { X, Y, P, E };
enum class ChordOp : uint8_t { U, X, Y };

const char* basis_name(Basis b);
const char* op_name(ChordOp op);
Basis parse_basis(std::string_view s);
ChordOp parse_op(std::string_view s);

struct SElem {
  Basis basis = Basis::Y;
  std::vector<PolyC> coeffs;  // no trailing zero

  SElem() = default;
  SElem(Basis b, std::vector<PolyC> c);
  static SElem unit(Basis b, int degree);  // basis element number `degree`
  static SElem one(Basis b) { return unit(b, 0); }

  int top_degree() const { return int(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  PolyC coeff(int k) const;

  bool operator==(const SElem&) const = default;
};

struct OperatorMatrix {
  ChordOp op;
  Basis basis;
  int size = 0;
  // column m = image of basis element m, truncated to rows 0..size-1
  std::vector<std::vector<PolyC>> columns;

  PolyC entry(int row, int col) const;
};

// Square matrices of PolyC in column-major layout, for checking operator
// identities. Identities with products are checked on a larger truncation
// and compared on the leading block, since every chord-adding operator
// raises the filtration degree by at most one.
using PolyMatrix = std::vector<std::vector<PolyC>>;

PolyMatrix pm_from(const OperatorMatrix& m);
PolyMatrix pm_scalar(const PolyC& value, int size);  // value * Id
PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_sub(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_scale(const PolyMatrix& a, const PolyC& s);
PolyMatrix pm_transpose(const PolyMatrix& a);
bool pm_equal_block(const PolyMatrix& a, const PolyMatrix& b, int size);

class ShareSpace {
 public:
  explicit ShareSpace(RewriteEngine& engine) : engine_(engine) {}

  RewriteEngine& engine() { return engine_; }

  // Coefficients u_{0,m}..u_{m,m} of U(y^m) in the y basis.
  std::vector<PolyC> u_column(int m);
  // u_m = c - m(m+1)/2
  static PolyC u_eigenvalue(int m);

  SElem e_poly(int n);  // in the Y basis
  SElem p_poly(int n);  // in the Y basis
  PolyC e_at_c(int n);  // n!/(2n-1)!! prod_{m=1..n} (c - (m^2-1)/4)
  PolyC p_norm(int n);  // (-1)^n (n!)^2 prod_{m=1..n} (c - (m^2-1)/4)

  SElem basis_convert(const SElem& v, Basis target);

  // Applies a chord-adding operator (computed in the Y basis, converted back
  // to the input basis).
  SElem apply(ChordOp op, const SElem& v);

  OperatorMatrix operator_matrix(ChordOp op, Basis basis, int size);

  // <a,b> = w_sl2 of the join; computed through the eigenbasis decomposition
  // of b: <a, e_n> = a(u_n) e_n(c). Symmetric.
  PolyC pairing(const SElem& a, const SElem& b);

  // Same value through the adjunction <a, y^n> = (U^n a)(y -> c); used to
  // cross-check the eigenbasis route without touching the e_n(c) formula.
  PolyC pairing_by_adjoint(const SElem& a, const SElem& b);

  // Strand reversal with sign: sigma(y^m) = (-1)^m x^m, extended linearly;
  // result in the basis of the input.
  SElem sigma(const SElem& v);

  // Image of a share in S, in the X basis (via the rewrite engine).
  SElem from_share(const Share& s);

  // y^m written in the x basis (engine-computed, unitriangular).
  std::vector<PolyC> y_in_x_column(int m);
  // x^m written in the y basis (inverse transition).
  std::vector<PolyC> x_in_y_column(int m);

 private:
  PolyCY elem_as_y_poly(const SElem& v_in_y) const;
  void ensure_u_columns(int m);
  void ensure_e_polys(int n);
  void ensure_transitions(int m);

  RewriteEngine& engine_;
  std::mutex mutex_;
  std::vector<std::vector<PolyC>> u_cols_;
  std::vector<PolyCY> e_polys_;
  std::vector<std::vector<PolyC>> y_in_x_;
  std::vector<std::vector<PolyC>> x_in_y_;
};

}  // namespace sl2w
