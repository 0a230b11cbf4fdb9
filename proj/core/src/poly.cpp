#include <sl2w/poly.hpp>

#include <algorithm>

namespace sl2w {

Rational parse_rational(std::string_view text) {
  auto bad = [&] { throw InputError("bad rational: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  std::string s(text);
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
  } catch (const std::exception&) {
    bad();
  }
  return Rational();
}

std::string rational_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// ---- PolyC ----

PolyC PolyC::constant(Rational q) {
  std::vector<Rational> c;
  if (q != 0) c.push_back(std::move(q));
  return PolyC(std::move(c));
}

PolyC PolyC::variable() { return PolyC({Rational(0), Rational(1)}); }

PolyC PolyC::c_minus(const Rational& a) { return PolyC({-a, Rational(1)}); }

void PolyC::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyC::coeff(int k) const {
  if (k < 0 || k >= int(coeffs_.size())) return Rational(0);
  return coeffs_[size_t(k)];
}

const Rational& PolyC::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading() of zero polynomial");
  return coeffs_.back();
}

PolyC& PolyC::operator+=(const PolyC& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyC& PolyC::operator-=(const PolyC& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyC operator*(const PolyC& a, const PolyC& b) {
  if (a.is_zero() || b.is_zero()) return PolyC();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyC(std::move(out));
}

PolyC PolyC::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return PolyC(std::move(out));
}

PolyC PolyC::scaled(const Rational& s) const {
  if (s == 0) return PolyC();
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * s;
  return PolyC(std::move(out));
}

Rational PolyC::evaluate(const Rational& v) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

PolyC PolyC::compose(const PolyC& inner) const {
  PolyC acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner + PolyC::constant(*it);
  }
  return acc;
}

PolyC PolyC::divide_exact(const PolyC& divisor) const {
  if (divisor.is_zero()) throw InputError("polynomial division by zero");
  PolyC rem = *this;
  std::vector<Rational> q;
  int dd = divisor.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    Rational s = rem.leading() / divisor.leading();
    if (int(q.size()) < shift + 1) q.resize(size_t(shift) + 1, Rational(0));
    q[size_t(shift)] += s;
    std::vector<Rational> sub(size_t(shift) + divisor.coeffs().size(), Rational(0));
    for (size_t i = 0; i < divisor.coeffs().size(); ++i)
      sub[size_t(shift) + i] = divisor.coeffs()[i] * s;
    rem -= PolyC(std::move(sub));
  }
  if (!rem.is_zero()) throw InputError("polynomial division leaves a remainder");
  return PolyC(std::move(q));
}

// ---- PolyCY ----

PolyCY PolyCY::constant(PolyC p) {
  std::vector<PolyC> c;
  if (!p.is_zero()) c.push_back(std::move(p));
  return PolyCY(std::move(c));
}

PolyCY PolyCY::variable() { return PolyCY({PolyC(), PolyC::constant(Rational(1))}); }

void PolyCY::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyC PolyCY::coeff(int k) const {
  if (k < 0 || k >= int(coeffs_.size())) return PolyC();
  return coeffs_[size_t(k)];
}

PolyCY& PolyCY::operator+=(const PolyCY& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyCY& PolyCY::operator-=(const PolyCY& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyCY operator*(const PolyCY& a, const PolyCY& b) {
  if (a.is_zero() || b.is_zero()) return PolyCY();
  std::vector<PolyC> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyCY(std::move(out));
}

PolyCY PolyCY::scaled(const Rational& s) const {
  std::vector<PolyC> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].scaled(s);
  return PolyCY(std::move(out));
}

PolyCY PolyCY::scaled(const PolyC& s) const {
  std::vector<PolyC> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * s;
  return PolyCY(std::move(out));
}

PolyC PolyCY::evaluate_y(const PolyC& v) const {
  PolyC acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

// ---- PolyC1C2X ----

PolyC1C2X PolyC1C2X::one() { return monomial({0, 0, 0}); }

PolyC1C2X PolyC1C2X::monomial(MonomialC1C2X m, Rational q) {
  PolyC1C2X p;
  if (q != 0) p.terms_.emplace(m, std::move(q));
  return p;
}

void PolyC1C2X::add_term(const MonomialC1C2X& m, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyC1C2X& PolyC1C2X::operator+=(const PolyC1C2X& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

PolyC1C2X& PolyC1C2X::operator-=(const PolyC1C2X& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

PolyC1C2X operator*(const PolyC1C2X& a, const PolyC1C2X& b) {
  PolyC1C2X out;
  for (const auto& [ma, qa] : a.terms_)
    for (const auto& [mb, qb] : b.terms_)
      out.add_term({ma.c1 + mb.c1, ma.c2 + mb.c2, ma.x + mb.x}, qa * qb);
  return out;
}

PolyC1C2X PolyC1C2X::scaled(const Rational& s) const {
  PolyC1C2X out;
  if (s == 0) return out;
  for (const auto& [m, q] : terms_) out.terms_.emplace(m, q * s);
  return out;
}

PolyC1C2X PolyC1C2X::shifted_c(int strand, int amount) const {
  PolyC1C2X out;
  for (const auto& [m, q] : terms_) {
    MonomialC1C2X nm = m;
    (strand == 0 ? nm.c1 : nm.c2) += amount;
    out.terms_.emplace(nm, q);
  }
  return out;
}

PolyC1C2X PolyC1C2X::swap_c1c2() const {
  PolyC1C2X out;
  for (const auto& [m, q] : terms_) out.terms_.emplace(MonomialC1C2X{m.c2, m.c1, m.x}, q);
  return out;
}

PolyCY PolyC1C2X::collapse_c() const {
  int dx = degree_x();
  if (is_zero()) return PolyCY();
  std::vector<std::vector<Rational>> acc(size_t(dx) + 1);
  for (const auto& [m, q] : terms_) {
    auto& v = acc[size_t(m.x)];
    size_t pow = size_t(m.c1 + m.c2);
    if (v.size() <= pow) v.resize(pow + 1, Rational(0));
    v[pow] += q;
  }
  std::vector<PolyC> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return PolyCY(std::move(out));
}

int PolyC1C2X::degree_c1() const {
  int d = 0;
  for (const auto& [m, q] : terms_) d = std::max(d, m.c1);
  return d;
}

int PolyC1C2X::degree_c2() const {
  int d = 0;
  for (const auto& [m, q] : terms_) d = std::max(d, m.c2);
  return d;
}

int PolyC1C2X::degree_x() const {
  int d = 0;
  for (const auto& [m, q] : terms_) d = std::max(d, m.x);
  return d;
}

}  // namespace sl2w
