#pragma once

// Local power-series charts at affine points of the curve.
//
// At (beta, gamma) with gamma != 0 the parameter is t = z/gamma - 1, and
//   y = beta - cT - (cT)^(q^2) - (cT)^(q^4) - ...,  T = (1+t)^r - 1, c = gamma^r.
// At gamma = 0 the parameter is z itself. On the gk model x is lifted from
// x^q + x = y^(q+1) with the constant term fixed to alpha.

#include <cstddef>
#include <optional>

#include "gk/curve.hpp"
#include "gk/series.hpp"

namespace gk {

enum class ChartKind { gamma_nonzero, gamma_zero };

struct LocalChart {
  CurveParams params;
  AffinePoint point;
  ChartKind kind;
  std::size_t precision;
  TruncatedSeries z;
  TruncatedSeries y;
  std::optional<TruncatedSeries> x;  // gk model only
  Fq c;                              // gamma^r
};

/// q^nu + 2: one more than the largest vanishing order the elimination needs.
std::size_t default_precision(const CurveParams& params);

/// precision 0 selects default_precision.
LocalChart make_chart(const CurveParams& params, const AffinePoint& pt, std::size_t precision = 0);

/// Substitutes the chart series into a (y, z) or (x, y, z) polynomial.
TruncatedSeries evaluate_in_chart(const SparsePoly& poly, const LocalChart& chart);

Valuation vanishing_order(const SparsePoly& poly, const LocalChart& chart);

/// Residuals y^(q^2) - y - z^r and (gk) x^q + x - y^(q+1) of the chart series;
/// both vanish modulo t^precision for a valid chart.
bool chart_satisfies_curve(const LocalChart& chart);

}  // namespace gk
