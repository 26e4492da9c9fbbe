#include "gk/expansion.hpp"

#include <map>
#include <stdexcept>

namespace gk {

namespace {

class PowerCache {
 public:
  explicit PowerCache(const TruncatedSeries& base) : base_(base) {}

  const TruncatedSeries& get(std::uint32_t e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    TruncatedSeries value = e == 0 ? TruncatedSeries::constant(base_.field_ptr(), Field::one(), base_.precision())
                            : e == 1 ? base_
                                     : get(e / 2) * get(e - e / 2);
    return cache_.emplace(e, std::move(value)).first->second;
  }

 private:
  TruncatedSeries base_;
  std::map<std::uint32_t, TruncatedSeries> cache_;
};

}  // namespace

std::size_t default_precision(const CurveParams& params) { return params.q_pow_nu() + 2; }

LocalChart make_chart(const CurveParams& params, const AffinePoint& pt, std::size_t precision) {
  if (pt.at_infinity) throw std::invalid_argument("no chart at infinity");
  if (!is_on_curve(params, pt)) throw std::invalid_argument("point is not on the curve");
  if (precision == 0) precision = default_precision(params);
  if (precision < 2) throw std::invalid_argument("chart precision must be at least 2");

  const FieldPtr& K = params.field;
  const Field& F = *K;
  const std::uint32_t e = params.e;
  const Fq beta = pt.y, gamma = pt.z;

  const bool zero = Field::is_zero(gamma);
  TruncatedSeries z(K, precision);
  TruncatedSeries xi(K, precision);
  Fq c = F.pow(gamma, static_cast<std::int64_t>(params.r));
  if (!zero) {
    z.set(0, gamma);
    z.set(1, gamma);
    xi = solve_as_series(scale(one_plus_t_pow(K, params.r, precision), c), 2 * e, ArtinSchreierSign::minus);
  } else {
    z.set(1, Field::one());
    xi = solve_as_series(TruncatedSeries::monomial(K, Field::one(), params.r, precision), 2 * e,
                         ArtinSchreierSign::minus);
  }
  TruncatedSeries y = TruncatedSeries::constant(K, beta, precision) + xi;

  std::optional<TruncatedSeries> x;
  if (params.model == Model::gk) {
    TruncatedSeries yq1 = p_power(y, e, precision) * y;
    yq1.set(0, Field::zero());  // subtract beta^(q+1)
    x = TruncatedSeries::constant(K, pt.x, precision) + solve_as_series(yq1, e, ArtinSchreierSign::plus);
  }
  return LocalChart{params, pt, zero ? ChartKind::gamma_zero : ChartKind::gamma_nonzero,
                    precision, std::move(z), std::move(y), std::move(x), c};
}

TruncatedSeries evaluate_in_chart(const SparsePoly& poly, const LocalChart& chart) {
  if (!(poly.field().spec() == chart.params.field->spec())) {
    throw FieldError("polynomial and chart are over different fields");
  }
  if (poly.nvars() != 2 && poly.nvars() != 3) throw std::invalid_argument("expected a (y, z) or (x, y, z) polynomial");
  if (poly.nvars() == 3 && poly.degree_in(0) > 0 && !chart.x) {
    throw std::invalid_argument("polynomial uses x but the chart has no x-series");
  }
  const unsigned yi = poly.nvars() == 3 ? 1 : 0;
  const FieldPtr& K = chart.params.field;
  const std::size_t n = chart.precision;

  // Terms grouped by (x, y) exponents; the z-part is done by Horner.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::pair<std::uint32_t, Fq>>> groups;
  for (const auto& [ex, c] : poly.terms()) {
    const std::uint32_t xe = poly.nvars() == 3 ? ex[0] : 0;
    groups[{xe, ex[yi]}].emplace_back(ex[yi + 1], c);
  }

  PowerCache ypow(chart.y);
  std::optional<PowerCache> xpow;
  if (chart.x) xpow.emplace(*chart.x);

  TruncatedSeries total(K, n);
  for (auto& [key, zterms] : groups) {
    // zterms are sorted by ascending z exponent (map order of the terms).
    TruncatedSeries acc(K, n);
    std::uint32_t deg = zterms.back().first;
    auto it = zterms.rbegin();
    for (std::int64_t d = deg; d >= 0; --d) {
      if (d != static_cast<std::int64_t>(deg)) acc = acc * chart.z;
      if (it != zterms.rend() && it->first == d) {
        acc.set(0, K->add(acc[0], it->second));
        ++it;
      }
    }
    if (key.second > 0) acc = acc * ypow.get(key.second);
    if (key.first > 0) acc = acc * xpow->get(key.first);
    total = total + acc;
  }
  return total;
}

Valuation vanishing_order(const SparsePoly& poly, const LocalChart& chart) {
  return evaluate_in_chart(poly, chart).valuation();
}

bool chart_satisfies_curve(const LocalChart& chart) {
  const auto& P = chart.params;
  const std::size_t n = chart.precision;
  PowerCache zpow(chart.z);
  TruncatedSeries lhs = p_power(chart.y, 2 * P.e, n) - chart.y;
  if ((lhs - zpow.get(static_cast<std::uint32_t>(P.r))).valuation().exact) return false;
  if (chart.x) {
    TruncatedSeries rel = p_power(*chart.x, P.e, n) + *chart.x - p_power(chart.y, P.e, n) * chart.y;
    if (rel.valuation().exact) return false;
  }
  return true;
}

}  // namespace gk
