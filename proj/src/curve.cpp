#include "gk/curve.hpp"

#include <sstream>
#include <stdexcept>

#include "gk/expansion.hpp"
#include "gk/surface.hpp"

namespace gk {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

// Nonzero elements of the subfield GF(p^k) are the powers of g^step.
struct Subfield {
  std::uint64_t size = 0;
  std::uint64_t step = 0;

  Subfield(const Field& F, std::uint32_t k) {
    size = ipow(F.characteristic(), k);
    step = (F.size() - 1) / (size - 1);
  }
  Fq nonzero(std::uint64_t j) const { return Fq{static_cast<std::uint32_t>(j * step + 1)}; }
};

AdditiveMap y_map(const CurveParams& P) {
  const Field& F = *P.field;
  return AdditiveMap(P.field, {{Field::one(), 2 * P.e}, {F.neg(Field::one()), 0}});
}

AdditiveMap x_map(const CurveParams& P) {
  return AdditiveMap(P.field, {{Field::one(), P.e}, {Field::one(), 0}});
}

std::vector<Fq> rational_only(const CurveParams& P, std::vector<Fq> v) {
  if (P.ext_degree == 1) return v;
  std::erase_if(v, [&](Fq a) { return !P.field->in_subfield(a, P.rational_degree()); });
  return v;
}

template <class Pick>
AffinePoint lift_point(const CurveParams& P, const AdditiveMap& ym, const AdditiveMap& xm, Fq z,
                       bool rational, Pick pick, bool& ok) {
  const Field& F = *P.field;
  ok = false;
  auto ys = ym.solve(F.pow(z, static_cast<std::int64_t>(P.r)));
  if (rational) ys = rational_only(P, std::move(ys));
  if (ys.empty()) return {};
  AffinePoint pt{false, Field::zero(), ys[pick(ys.size())], z};
  if (P.model == Model::gk) {
    auto xs = xm.solve(F.pow(pt.y, P.q + 1));
    if (rational) xs = rational_only(P, std::move(xs));
    if (xs.empty()) return {};
    pt.x = xs[pick(xs.size())];
  }
  ok = true;
  return pt;
}

}  // namespace

std::string to_string(Model m) { return m == Model::plane ? "plane" : "gk"; }

Model parse_model(const std::string& s) {
  if (s == "plane") return Model::plane;
  if (s == "gk") return Model::gk;
  throw std::invalid_argument("unknown model '" + s + "' (expected plane or gk)");
}

std::uint64_t genus(std::uint32_t q, std::uint32_t nu, Model model) {
  const std::uint64_t qn = ipow(q, nu);
  if (model == Model::plane) return (q - 1) * (qn - q) / 2;
  return (q - 1) * (qn * q + qn - std::uint64_t{q} * q) / 2;
}

CurveParams make_curve(std::uint32_t q, std::uint32_t nu, Model model, std::uint32_t ext_degree) {
  auto pe = as_prime_power(q);
  if (!pe || q < 2) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (nu < 1 || nu % 2 == 0) throw std::invalid_argument("nu must be odd and at least 1");
  if (ext_degree < 1) throw std::invalid_argument("extension degree must be at least 1");
  const std::uint64_t deg = std::uint64_t{2} * pe->second * nu * ext_degree;
  if (deg > 64 || ipow(pe->first, static_cast<std::uint32_t>(deg)) > kMaxFieldSize) {
    throw std::invalid_argument("ambient field GF(" + std::to_string(pe->first) + "^" + std::to_string(deg) +
                                ") exceeds the supported size");
  }
  CurveParams P;
  P.q = q;
  P.p = pe->first;
  P.e = pe->second;
  P.nu = nu;
  P.m = ipow(q, nu) + 1;
  P.r = P.m / (q + 1);
  P.model = model;
  P.genus = genus(q, nu, model);
  P.ext_degree = ext_degree;
  P.field = make_field(P.p, static_cast<std::uint32_t>(deg));
  return P;
}

std::uint64_t hasse_weil_max(const CurveParams& P) {
  const std::uint64_t qn = P.m - 1;
  return qn * qn + 1 + 2 * P.genus * qn;
}

PoleOrders pole_orders(const CurveParams& P) {
  if (P.model == Model::plane) return {0, P.r, std::uint64_t{P.q} * P.q};
  return {P.m, P.q * P.r, std::uint64_t{P.q} * P.q * P.q};
}

bool is_on_curve(const CurveParams& P, const AffinePoint& pt) {
  if (pt.at_infinity) return true;
  const Field& F = *P.field;
  if (F.sub(F.frobenius(pt.y, 2 * P.e), pt.y) != F.pow(pt.z, static_cast<std::int64_t>(P.r))) return false;
  if (P.model == Model::plane) return Field::is_zero(pt.x);
  return F.add(F.frobenius(pt.x, P.e), pt.x) == F.pow(pt.y, P.q + 1);
}

bool is_rational(const CurveParams& P, const AffinePoint& pt) {
  if (pt.at_infinity) return true;
  const Field& F = *P.field;
  const std::uint32_t k = P.rational_degree();
  return F.in_subfield(pt.x, k) && F.in_subfield(pt.y, k) && F.in_subfield(pt.z, k);
}

std::string to_string(const CurveParams& P, const AffinePoint& pt) {
  if (pt.at_infinity) return "inf";
  std::ostringstream os;
  const auto idx = point_indices(P, pt);
  os << '(';
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ')';
  return os.str();
}

std::uint64_t for_each_rational_point(const CurveParams& P,
                                      const std::function<void(const AffinePoint&)>& visit) {
  const Field& F = *P.field;
  const AdditiveMap ym = y_map(P);
  const AdditiveMap xm = x_map(P);
  const Subfield sub(F, P.rational_degree());
  std::uint64_t count = 0;

  auto with_z = [&](Fq z) {
    auto ys = rational_only(P, ym.solve(F.pow(z, static_cast<std::int64_t>(P.r))));
    for (Fq y : ys) {
      if (P.model == Model::plane) {
        ++count;
        if (visit) visit({false, Field::zero(), y, z});
        continue;
      }
      for (Fq x : rational_only(P, xm.solve(F.pow(y, P.q + 1)))) {
        ++count;
        if (visit) visit({false, x, y, z});
      }
    }
  };
  with_z(Field::zero());
  for (std::uint64_t j = 0; j + 1 < sub.size; ++j) with_z(sub.nonzero(j));
  ++count;
  if (visit) visit(AffinePoint::infinity());
  return count;
}

std::uint64_t count_points(const CurveParams& P) { return for_each_rational_point(P, {}); }

std::vector<AffinePoint> rational_points(const CurveParams& P) {
  std::vector<AffinePoint> out;
  for_each_rational_point(P, [&](const AffinePoint& pt) { out.push_back(pt); });
  return out;
}

MaximalityReport verify_maximality(const CurveParams& P) {
  MaximalityReport rep;
  rep.count = count_points(P);
  rep.bound = hasse_weil_max(P);
  rep.maximal = rep.count == rep.bound;
  return rep;
}

AffinePoint frobenius_point(const CurveParams& P, const AffinePoint& pt) {
  if (pt.at_infinity) return pt;
  const Field& F = *P.field;
  const std::uint64_t f = F.frobenius_factor(P.rational_frob());
  return {false, F.frobenius_with(pt.x, f), F.frobenius_with(pt.y, f), F.frobenius_with(pt.z, f)};
}

AffinePoint conjugate_q_nu(const CurveParams& P, const AffinePoint& pt) {
  if (pt.at_infinity) return pt;
  const Field& F = *P.field;
  const std::uint64_t f = F.frobenius_factor(std::uint64_t{P.e} * P.nu);
  return {false, F.frobenius_with(pt.x, f), F.frobenius_with(pt.y, f), F.frobenius_with(pt.z, f)};
}

AffinePoint sample_rational_point(const CurveParams& P, std::mt19937_64& rng, bool gamma_nonzero) {
  const Field& F = *P.field;
  const AdditiveMap ym = y_map(P);
  const AdditiveMap xm = x_map(P);
  const Subfield sub(F, P.rational_degree());
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Fq z = Field::zero();
    if (gamma_nonzero) {
      z = sub.nonzero(rng() % (sub.size - 1));
    } else {
      const std::uint64_t j = rng() % sub.size;
      if (j > 0) z = sub.nonzero(j - 1);
    }
    bool ok = false;
    AffinePoint pt = lift_point(P, ym, xm, z, true, pick, ok);
    if (ok) return pt;
  }
  throw std::runtime_error("no rational point found");
}

AffinePoint sample_nonrational_point(const CurveParams& P, std::mt19937_64& rng) {
  if (P.ext_degree < 2) throw std::invalid_argument("non-rational points need an extension degree of at least 2");
  const Field& F = *P.field;
  const AdditiveMap ym = y_map(P);
  const AdditiveMap xm = x_map(P);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Fq z{static_cast<std::uint32_t>(rng() % (F.size() - 1)) + 1};
    if (F.in_subfield(z, P.rational_degree())) continue;
    bool ok = false;
    AffinePoint pt = lift_point(P, ym, xm, z, false, pick, ok);
    if (ok) return pt;
  }
  throw std::runtime_error("no non-rational point found");
}

AffinePoint point_from_indices(const CurveParams& P, const std::vector<std::uint64_t>& idx) {
  const std::size_t want = P.model == Model::plane ? 2 : 3;
  if (idx.size() != want) {
    throw std::invalid_argument("expected " + std::to_string(want) + " coordinates for the " +
                                to_string(P.model) + " model");
  }
  const Field& F = *P.field;
  for (auto v : idx)
    if (v >= F.size()) throw std::invalid_argument("coordinate index out of range");
  AffinePoint pt;
  std::size_t k = 0;
  if (P.model == Model::gk) pt.x = F.from_index(idx[k++]);
  pt.y = F.from_index(idx[k++]);
  pt.z = F.from_index(idx[k]);
  if (!is_on_curve(P, pt)) throw std::invalid_argument("point is not on the curve");
  return pt;
}

std::vector<std::uint64_t> point_indices(const CurveParams& P, const AffinePoint& pt) {
  const Field& F = *P.field;
  if (P.model == Model::plane) return {F.to_index(pt.y), F.to_index(pt.z)};
  return {F.to_index(pt.x), F.to_index(pt.y), F.to_index(pt.z)};
}

EquivalenceReport verify_fundamental_equivalence(const CurveParams& P, const AffinePoint& pt,
                                                 const SurfaceData& sd) {
  if (pt.at_infinity || Field::is_zero(pt.z)) throw std::invalid_argument("point must be affine with z != 0");
  if (!is_on_curve(P, pt)) throw std::invalid_argument("point is not on the curve");
  if (sd.q != P.q || sd.nu != P.nu) throw std::invalid_argument("surface data is for another curve");

  const AffinePoint conj = conjugate_q_nu(P, pt);
  const FieldElement a(P.field, conj.x), b(P.field, conj.y), c(P.field, conj.z);
  const SparsePoly h = P.model == Model::gk ? h_gk(sd, a, b, c) : h_plane(sd, b, c);

  EquivalenceReport rep;
  const std::uint64_t qn = P.q_pow_nu();
  const AffinePoint phi = frobenius_point(P, pt);
  rep.rational = phi == pt;
  rep.order_at_point = vanishing_order(h, make_chart(P, pt));
  if (rep.rational) {
    rep.expected_at_point = qn + 1;
    rep.ok = rep.order_at_point == Valuation::exactly(qn + 1);
  } else {
    rep.expected_at_point = qn;
    rep.expected_at_conjugate = 1;
    rep.order_at_conjugate = vanishing_order(h, make_chart(P, phi));
    rep.ok = rep.order_at_point == Valuation::exactly(qn) && rep.order_at_conjugate == Valuation::exactly(1);
  }
  return rep;
}

}  // namespace gk
