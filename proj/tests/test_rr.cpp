#include <doctest.h>

#include "gk/rr.hpp"

using namespace gk;

namespace {

struct Setup {
  CurveParams P;
  AffinePoint Q;
  std::shared_ptr<const BasisTable> table;
  std::shared_ptr<const HFunction> h;
};

Setup setup(std::uint32_t q, Model model, std::optional<AffinePoint> Q = std::nullopt) {
  const CurveParams P = make_curve(q, 3, model);
  std::mt19937_64 rng(q + 17);
  const AffinePoint pt = Q ? *Q : sample_rational_point(P, rng, true);
  return {P, pt, std::make_shared<const BasisTable>(two_point_basis(P, pt)),
          std::make_shared<const HFunction>(h_function(P, pt, build_surface(q, 3)))};
}

}  // namespace

TEST_CASE("h functions") {
  const Setup o = setup(2, Model::gk, AffinePoint{});
  CHECK(o.h->kind == HKind::x_origin);
  CHECK(o.h->m == 9);
  const Setup g = setup(2, Model::gk);
  CHECK(g.h->kind == HKind::h_gk);
  const Setup c = setup(2, Model::plane);
  CHECK(c.h->kind == HKind::h_plane);
  const CurveParams P = make_curve(2, 3, Model::plane);
  const auto b = h_function(P, point_from_indices(P, {1, 0}), build_surface(2, 3));
  CHECK(b.kind == HKind::y_minus_beta);
  CHECK(b.m == 3);
  CHECK_THROWS_AS(h_function(P, AffinePoint{}, build_surface(3, 3)), std::invalid_argument);
}

TEST_CASE("small spaces by hand") {
  const Setup s = setup(2, Model::gk, AffinePoint{});
  // L(9 inf) on the GK curve with q = 2 is spanned by 1, y, z, x.
  CHECK(dim_L(9, 0, *s.table, *s.h) == 4);
  CHECK(dim_L(0, 0, *s.table, *s.h) == 1);
  CHECK(dim_L(-1, 0, *s.table, *s.h) == 0);
  const RRBasis rr = basis_of_L(9, 0, s.table, s.h);
  CHECK(rr.dim() == 4);
  CHECK(rr.functions.front().pole == 0);
  CHECK(rr.functions.back().pole == 9);
}

TEST_CASE("Riemann-Roch and generator ranks") {
  for (Model model : {Model::plane, Model::gk}) {
    for (std::uint32_t q : {2u, 3u}) {
      const Setup s = setup(q, model);
      const auto g = static_cast<std::int64_t>(s.P.genus);
      const auto points = evaluation_points(s.P, s.Q);
      CHECK(points.size() == count_points(s.P) - 2);
      std::mt19937_64 rng(q);
      for (int k = 0; k < 10; ++k) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % (3 * g + 5)) - g;
        const std::int64_t b = 2 * g - 1 - a + static_cast<std::int64_t>(rng() % 8);
        CHECK(riemann_roch_check(a, b, *s.table, *s.h));
        CHECK(dim_L(a, b, *s.table, *s.h) == static_cast<std::size_t>(a + b + 1 - g));
      }
      // a + b below the code length: evaluation is injective
      for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{2 * g, 3}, {g + 2, g}, {3 * g, -1}}) {
        const RRBasis rr = basis_of_L(a, b, s.table, s.h);
        CHECK(rank(generator_matrix(rr, points), *s.P.field) == rr.dim());
      }
    }
  }
}

TEST_CASE("function values") {
  const Setup s = setup(2, Model::gk);
  const RRBasis rr = basis_of_L(20, 5, s.table, s.h);
  const auto points = evaluation_points(s.P, s.Q);
  const Matrix G = generator_matrix(rr, points);
  for (std::size_t r = 0; r < rr.dim(); ++r)
    for (std::size_t c = 0; c < points.size(); c += 17) CHECK(G[r][c] == evaluate_function(rr, rr.functions[r], points[c]));
  CHECK_THROWS_AS(evaluate_function(rr, rr.functions[0], s.Q), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(rr, {AffinePoint::infinity()}), std::invalid_argument);
}

TEST_CASE("orders of the basis functions at Q") {
  const Setup s = setup(3, Model::plane);
  const RRBasis rr = basis_of_L(40, 10, s.table, s.h);
  const LocalChart ch = make_chart(s.P, s.Q, 200);
  for (const auto& f : rr.functions) {
    if (f.k < 0) continue;
    const SparsePoly fn = s.table->rows[f.row].rep * s.h->poly.pow(static_cast<std::uint32_t>(f.k));
    CHECK(vanishing_order(fn, ch) == Valuation::exactly(static_cast<std::size_t>(f.order)));
    CHECK(f.order >= -10);
    CHECK(f.pole <= 40);
  }
}

TEST_CASE("rank") {
  const FieldPtr F = make_field(3, 1);
  const Fq one = Field::one(), two = F->from_int(2), zero = Field::zero();
  CHECK(rank({{one, two, zero}, {two, one, zero}, {zero, zero, zero}}, *F) == 1);
  CHECK(rank({{one, zero}, {zero, one}}, *F) == 2);
  CHECK(rank({}, *F) == 0);
}
