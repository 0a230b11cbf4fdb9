// Truncated power series expansion of rational functions in t with PolyCY
// coefficients. Used to extract the matrix coefficients u_{i,m} of the
// arch-adding operator from its generating function.
#pragma once

#include <sl2w/poly.hpp>

#include <vector>

namespace sl2w {

// Polynomial in t with PolyCY coefficients, ascending.
using SeriesPoly = std::vector<PolyCY>;

struct SeriesCoeffs {
  int order = 0;
  std::vector<PolyCY> coeffs;  // t^0 .. t^order, length order+1
};

// Expands numerator/denominator to the given order by the linear recurrence
// induced by the denominator. The denominator's constant term must be a
// nonzero rational constant (1 for every use in this library).
SeriesCoeffs expand_rational_series(const SeriesPoly& numerator,
                                    const SeriesPoly& denominator,
                                    int order);

// Numerator and denominator of the generating function
//
//   sum_m U(y^m) t^m = 1/(1-yt) * ( c + (c^2 t^2 - y t)
//                                   / (1 - (2y-1)t - (2c-y^2-y)t^2) )
//
// brought over the common denominator. The coefficient of y^i t^m is u_{i,m}.
SeriesPoly u_series_numerator();
SeriesPoly u_series_denominator();

}  // namespace sl2w
