#include "gk/rr.hpp"

#include <algorithm>
#include <stdexcept>

#include "gk/expansion.hpp"

namespace gk {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

void require_affine_rational(const CurveParams& P, const AffinePoint& Q) {
  if (Q.at_infinity) throw std::invalid_argument("the second point must be affine");
  if (!is_on_curve(P, Q)) throw std::invalid_argument("point is not on the curve");
  if (!is_rational(P, Q)) throw std::invalid_argument("the second point must be rational");
}

bool is_gk_origin(const CurveParams& P, const AffinePoint& Q) {
  return P.model == Model::gk && Field::is_zero(Q.x) && Field::is_zero(Q.y) && Field::is_zero(Q.z);
}

void reject_short_orbit(const CurveParams& P, const AffinePoint& Q) {
  if (P.model == Model::gk && Field::is_zero(Q.z) && !is_gk_origin(P, Q)) {
    throw std::invalid_argument("no two-point basis is known for gk points with z = 0 other than the origin");
  }
}

std::vector<Fq> coordinates(unsigned nvars, const AffinePoint& pt) {
  if (nvars == 3) return {pt.x, pt.y, pt.z};
  return {pt.y, pt.z};
}

}  // namespace

HFunction h_function(const CurveParams& P, const AffinePoint& Q, const SurfaceData& sd) {
  require_affine_rational(P, Q);
  reject_short_orbit(P, Q);
  if (sd.q != P.q || sd.nu != P.nu) throw std::invalid_argument("surface data is for another curve");
  const Field& F = *P.field;

  HFunction h{HKind::h_plane, SparsePoly(P.field, 2), P.m};
  if (is_gk_origin(P, Q)) {
    h = {HKind::x_origin, SparsePoly::variable(P.field, 3, 0), P.m};
  } else if (Field::is_zero(Q.z)) {
    SparsePoly poly = SparsePoly::variable(P.field, 2, 0);
    poly.add_term({0, 0, 0}, F.neg(Q.y));
    h = {HKind::y_minus_beta, std::move(poly), P.r};
  } else {
    const AffinePoint c = conjugate_q_nu(P, Q);
    const FieldElement a(P.field, c.x), b(P.field, c.y), g(P.field, c.z);
    if (P.model == Model::gk) {
      h = {HKind::h_gk, h_gk(sd, a, b, g), P.m};
    } else {
      h = {HKind::h_plane, h_plane(sd, b, g), P.m};
    }
  }
  const Valuation v = vanishing_order(h.poly, make_chart(P, Q, h.m + 1));
  if (v != Valuation::exactly(h.m)) {
    throw std::logic_error("h vanishes to order " + to_string(v) + " at Q, expected " + std::to_string(h.m));
  }
  return h;
}

BasisTable two_point_basis(const CurveParams& P, const AffinePoint& Q) {
  require_affine_rational(P, Q);
  reject_short_orbit(P, Q);
  if (!Field::is_zero(Q.z)) return build_basis(P, make_chart(P, Q));

  detail::EliminationSetup setup{{}, 0, SparsePoly(P.field, 2), 0};
  if (P.model == Model::gk) {
    // Modulo x: y^(q+1) = x^q + x vanishes.
    setup.monomials = monomial_order(P);
    setup.y_bound = P.q;
    setup.m = P.m;
  } else {
    // Modulo y - beta only powers of z survive.
    for (std::uint32_t j = 0; j < P.r; ++j) setup.monomials.push_back({0, j, std::uint64_t{j} * P.q * P.q});
    setup.y_bound = 0;
    setup.y_rule = SparsePoly::constant(P.field, 2, Q.y);
    setup.m = P.r;
  }
  return detail::eliminate(P, make_chart(P, Q, setup.m + 1), setup, Seeding::incremental);
}

RRBasis basis_of_L(std::int64_t a, std::int64_t b, std::shared_ptr<const BasisTable> table,
                   std::shared_ptr<const HFunction> h) {
  if (!table || !h) throw std::invalid_argument("missing table or h");
  if (table->m != h->m) throw std::invalid_argument("table and h belong to different points");
  const auto m = static_cast<std::int64_t>(h->m);
  RRBasis rr{a, b, table, h, {}};
  for (std::size_t idx = 0; idx < table->rows.size(); ++idx) {
    const auto pole = static_cast<std::int64_t>(table->rows[idx].pole);
    const auto vanish = static_cast<std::int64_t>(table->rows[idx].vanish);
    const std::int64_t k_hi = floor_div(a - pole, m);
    const std::int64_t k_lo = ceil_div(-b - vanish, m);
    for (std::int64_t k = k_lo; k <= k_hi; ++k) rr.functions.push_back({idx, k, pole + k * m, vanish + k * m});
  }
  std::sort(rr.functions.begin(), rr.functions.end(),
            [](const RRFunction& x, const RRFunction& y) { return x.pole < y.pole; });
  return rr;
}

std::size_t dim_L(std::int64_t a, std::int64_t b, const BasisTable& table, const HFunction& h) {
  const auto m = static_cast<std::int64_t>(h.m);
  std::size_t n = 0;
  for (const auto& row : table.rows) {
    const std::int64_t k_hi = floor_div(a - static_cast<std::int64_t>(row.pole), m);
    const std::int64_t k_lo = ceil_div(-b - static_cast<std::int64_t>(row.vanish), m);
    if (k_hi >= k_lo) n += static_cast<std::size_t>(k_hi - k_lo + 1);
  }
  return n;
}

bool riemann_roch_check(std::int64_t a, std::int64_t b, const BasisTable& table, const HFunction& h) {
  const auto g = static_cast<std::int64_t>(table.params.genus);
  if (a + b < 2 * g - 1) return true;
  return static_cast<std::int64_t>(dim_L(a, b, table, h)) == a + b + 1 - g;
}

Fq evaluate_function(const RRBasis& rr, const RRFunction& fn, const AffinePoint& pt) {
  const Field& F = *rr.table->params.field;
  if (pt.at_infinity || pt == rr.table->point) {
    throw std::invalid_argument("cannot evaluate at infinity or at the second point");
  }
  const SparsePoly& rep = rr.table->rows.at(fn.row).rep;
  const Fq base = rep.evaluate(coordinates(rep.nvars(), pt));
  if (fn.k == 0) return base;
  const Fq hv = rr.h->poly.evaluate(coordinates(rr.h->poly.nvars(), pt));
  if (Field::is_zero(hv)) throw std::logic_error("h vanishes away from the second point");
  return F.mul(base, F.pow(hv, fn.k));
}

Matrix generator_matrix(const RRBasis& rr, const std::vector<AffinePoint>& points) {
  const Field& F = *rr.table->params.field;
  for (const auto& pt : points) {
    if (pt.at_infinity || pt == rr.table->point) throw std::invalid_argument("evaluation point lies in the divisor support");
  }
  // h values once per point.
  std::vector<Fq> hval(points.size());
  for (std::size_t c = 0; c < points.size(); ++c) {
    hval[c] = rr.h->poly.evaluate(coordinates(rr.h->poly.nvars(), points[c]));
    if (Field::is_zero(hval[c])) throw std::logic_error("h vanishes away from the second point");
  }
  Matrix mat(rr.functions.size(), std::vector<Fq>(points.size()));
  for (std::size_t r = 0; r < rr.functions.size(); ++r) {
    const auto& fn = rr.functions[r];
    const SparsePoly& rep = rr.table->rows.at(fn.row).rep;
    for (std::size_t c = 0; c < points.size(); ++c) {
      const Fq base = rep.evaluate(coordinates(rep.nvars(), points[c]));
      mat[r][c] = fn.k == 0 ? base : F.mul(base, F.pow(hval[c], fn.k));
    }
  }
  return mat;
}

std::size_t rank(Matrix mat, const Field& F) {
  std::size_t rk = 0;
  const std::size_t cols = mat.empty() ? 0 : mat[0].size();
  for (std::size_t c = 0; c < cols && rk < mat.size(); ++c) {
    std::size_t piv = rk;
    while (piv < mat.size() && Field::is_zero(mat[piv][c])) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[rk], mat[piv]);
    const Fq inv = F.inv(mat[rk][c]);
    for (std::size_t r = rk + 1; r < mat.size(); ++r) {
      if (Field::is_zero(mat[r][c])) continue;
      const Fq f = F.mul(mat[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) mat[r][k] = F.sub(mat[r][k], F.mul(f, mat[rk][k]));
    }
    ++rk;
  }
  return rk;
}

std::vector<AffinePoint> evaluation_points(const CurveParams& P, const AffinePoint& Q) {
  std::vector<AffinePoint> out;
  for_each_rational_point(P, [&](const AffinePoint& pt) {
    if (!pt.at_infinity && !(pt == Q)) out.push_back(pt);
  });
  return out;
}

}  // namespace gk
