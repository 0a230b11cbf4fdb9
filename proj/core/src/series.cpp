#include <sl2w/series.hpp>

namespace sl2w {

SeriesCoeffs expand_rational_series(const SeriesPoly& numerator,
                                    const SeriesPoly& denominator,
                                    int order) {
  if (denominator.empty() || denominator[0].degree() != 0 ||
      denominator[0].coeff(0).degree() != 0) {
    throw InputError("series denominator needs an invertible constant term");
  }
  Rational d0 = denominator[0].coeff(0).coeff(0);

  // a_k = (n_k - sum_{j=1..k} d_j a_{k-j}) / d0
  SeriesCoeffs out;
  out.order = order;
  out.coeffs.reserve(size_t(order) + 1);
  for (int k = 0; k <= order; ++k) {
    PolyCY ak = k < int(numerator.size()) ? numerator[size_t(k)] : PolyCY();
    for (int j = 1; j <= k && j < int(denominator.size()); ++j) {
      ak -= denominator[size_t(j)] * out.coeffs[size_t(k - j)];
    }
    out.coeffs.push_back(ak.scaled(Rational(1) / d0));
  }
  return out;
}

namespace {
PolyC pc(std::initializer_list<long long> cs) {
  std::vector<Rational> v;
  for (long long x : cs) v.emplace_back(x);
  return PolyC(std::move(v));
}
}  // namespace

SeriesPoly u_series_numerator() {
  // c + (c - y - 2cy) t + (c y^2 + c y - c^2) t^2
  return {
      PolyCY({pc({0, 1})}),
      PolyCY({pc({0, 1}), pc({-1, -2})}),
      PolyCY({pc({0, 0, -1}), pc({0, 1}), pc({0, 1})}),
  };
}

SeriesPoly u_series_denominator() {
  // (1 - yt)(1 - (2y-1)t - (2c - y^2 - y)t^2)
  //   = 1 + (1-3y) t + (3y^2 - 2c) t^2 + (2cy - y^2 - y^3) t^3
  return {
      PolyCY({pc({1})}),
      PolyCY({pc({1}), pc({-3})}),
      PolyCY({pc({0, -2}), PolyC(), pc({3})}),
      PolyCY({PolyC(), pc({0, 2}), pc({-1}), pc({-1})}),
  };
}

}  // namespace sl2w
