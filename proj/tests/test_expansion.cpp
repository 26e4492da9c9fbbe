#include <doctest.h>

#include "gk/curve.hpp"
#include "gk/expansion.hpp"

using namespace gk;

namespace {

// Substitutes the chart back into the defining equations by plain series
// multiplication, independently of chart_satisfies_curve.
void check_substitution(const LocalChart& ch) {
  const CurveParams& P = ch.params;
  const std::size_t N = ch.precision;
  auto power = [&](const TruncatedSeries& s, std::uint64_t e) {
    TruncatedSeries out = TruncatedSeries::constant(P.field, Field::one(), N);
    for (std::uint64_t k = 0; k < e; ++k) out = out * s;
    return out;
  };
  const auto plane = power(ch.y, std::uint64_t{P.q} * P.q) - ch.y - power(ch.z, P.r);
  CHECK(plane.truncated(N).valuation() == Valuation::at_least(N));
  if (ch.x) {
    const auto gk = power(*ch.x, P.q) + *ch.x - power(ch.y, P.q + 1);
    CHECK(gk.truncated(N).valuation() == Valuation::at_least(N));
  }
  CHECK(ch.z[0] == ch.point.z);
  CHECK(ch.y[0] == ch.point.y);
  if (ch.x) CHECK((*ch.x)[0] == ch.point.x);
}

}  // namespace

TEST_CASE("charts satisfy the curve equations") {
  for (Model model : {Model::plane, Model::gk}) {
    for (std::uint32_t q : {2u, 3u}) {
      const CurveParams P = make_curve(q, 3, model);
      std::mt19937_64 rng(q);
      for (int k = 0; k < 3; ++k) {
        const LocalChart ch = make_chart(P, sample_rational_point(P, rng, true));
        CHECK(ch.kind == ChartKind::gamma_nonzero);
        CHECK(ch.precision == default_precision(P));
        CHECK(chart_satisfies_curve(ch));
        check_substitution(ch);
      }
      const LocalChart origin = make_chart(P, AffinePoint{}, 20);
      CHECK(origin.kind == ChartKind::gamma_zero);
      check_substitution(origin);
    }
  }
  CHECK(default_precision(make_curve(3, 3, Model::gk)) == 29);
}

TEST_CASE("vanishing orders of coordinate functions") {
  const CurveParams P = make_curve(2, 3, Model::gk);
  const FieldPtr F = P.field;
  const auto x = SparsePoly::variable(F, 3, 0), y = SparsePoly::variable(F, 3, 1), z = SparsePoly::variable(F, 3, 2);
  std::mt19937_64 rng(4);
  const AffinePoint pt = sample_rational_point(P, rng, true);
  const LocalChart ch = make_chart(P, pt);
  auto shift = [&](const SparsePoly& v, Fq c) { return v - SparsePoly::constant(F, 3, c); };
  CHECK(vanishing_order(shift(z, pt.z), ch) == Valuation::exactly(1));
  CHECK(vanishing_order(shift(y, pt.y), ch) == Valuation::exactly(1));
  CHECK(vanishing_order(shift(x, pt.x), ch) == Valuation::exactly(1));
  CHECK(vanishing_order(shift(z, pt.z).pow(3), ch) == Valuation::exactly(3));
  // the curve equation itself vanishes to full precision
  CHECK(vanishing_order(x.pow(2) + x - y.pow(3), ch) == Valuation::at_least(ch.precision));

  // at the origin z is the parameter, y - 0 has order r and x order q^nu + 1
  const LocalChart o = make_chart(P, AffinePoint{}, 12);
  CHECK(vanishing_order(z, o) == Valuation::exactly(1));
  CHECK(vanishing_order(y, o) == Valuation::exactly(3));
  CHECK(vanishing_order(x, o) == Valuation::exactly(9));
}

TEST_CASE("chart errors") {
  const CurveParams P = make_curve(2, 3, Model::plane);
  CHECK_THROWS_AS(make_chart(P, AffinePoint::infinity()), std::invalid_argument);
  AffinePoint off{};
  off.z = Field::one();
  CHECK_THROWS_AS(make_chart(P, off), std::invalid_argument);
  CHECK_THROWS_AS(make_chart(P, AffinePoint{}, 1), std::invalid_argument);
  const LocalChart ch = make_chart(P, AffinePoint{}, 5);
  CHECK_THROWS_AS(evaluate_in_chart(SparsePoly::variable(P.field, 3, 0), ch), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_in_chart(SparsePoly::variable(make_field(2, 2), 2, 0), ch), FieldError);
}
