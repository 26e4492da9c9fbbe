#include "gk/surface.hpp"

#include <stdexcept>
#include <string>

namespace gk {

namespace {

using Dense = std::vector<Fq>;

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    out *= base;
    if (out > (std::uint64_t{1} << 31)) throw std::invalid_argument("surface exponents too large");
  }
  return out;
}

SparsePoly t_poly(const FieldPtr& field, const std::vector<std::uint64_t>& exps) {
  SparsePoly p(field, 1);
  for (auto e : exps) p.add_term({static_cast<std::uint32_t>(e), 0, 0}, Field::one());
  return p;
}

// Dense univariate product with a sparse factor: out = a * b.
Dense mul_dense_sparse(const Field& F, const Dense& a, const SparsePoly& b) {
  std::size_t deg_b = 0;
  for (const auto& [e, c] : b.terms()) deg_b = std::max<std::size_t>(deg_b, e[0]);
  Dense out(a.size() + deg_b, Field::zero());
  std::vector<std::pair<std::size_t, Fq>> bt;
  for (const auto& [e, c] : b.terms()) bt.emplace_back(e[0], c);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Fq ai = a[i];
    if (Field::is_zero(ai)) continue;
    for (const auto& [j, c] : bt) out[i + j] = F.add(out[i + j], F.mul(ai, c));
  }
  return out;
}

Dense to_dense(const SparsePoly& p) {
  Dense out(p.degree_in(0) + 1, Field::zero());
  for (const auto& [e, c] : p.terms()) out[e[0]] = c;
  return out;
}

void trim(Dense& d) {
  while (!d.empty() && Field::is_zero(d.back())) d.pop_back();
}

void require_on_plane(const SurfaceData& sd, const FieldElement& b, const FieldElement& c) {
  if (!(b.field().spec() == c.field().spec())) throw FieldError("point coordinates in different fields");
  if (b.frobenius(2 * sd.e) - b != c.pow(static_cast<std::int64_t>(sd.r))) {
    throw std::invalid_argument("(b, c) is not on the plane curve y^(q^2) - y = z^r");
  }
}

}  // namespace

std::vector<std::uint64_t> SurfaceData::exponents(const SparsePoly& poly) const {
  std::vector<std::uint64_t> out;
  for (const auto& [e, c] : poly.terms()) out.push_back(e[0]);
  return out;
}

SurfaceData build_surface(std::uint32_t q, std::uint32_t nu) {
  auto pe = as_prime_power(q);
  if (!pe) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (nu < 1 || nu % 2 == 0) throw std::invalid_argument("nu must be odd and at least 1");
  checked_pow(q, nu + 1);

  const FieldPtr field = make_field(pe->first, pe->second);
  const SparsePoly zero(field, 1);
  SurfaceData sd{q, pe->first, pe->second, nu, (nu + 1) / 2, {}, {}, 0, 0, field, zero, zero, zero, zero};
  for (std::uint32_t i = 1; i <= sd.k; ++i) sd.r_seq.push_back((checked_pow(q, 2 * i - 1) + 1) / (q + 1));
  for (std::uint32_t j = 0; j <= sd.k; ++j) sd.s_seq.push_back((checked_pow(q, 2 * j) - 1) / (q + 1));
  sd.r = sd.r_seq.back();
  sd.s = sd.s_seq.back();

  std::vector<std::uint64_t> f_exps(sd.r_seq.begin(), sd.r_seq.end() - 1);
  std::vector<std::uint64_t> g_exps(sd.s_seq.begin(), sd.s_seq.end() - 1);
  std::vector<std::uint64_t> z_exps;
  // Below-diagonal entries r_i + s_j, 0 <= j < i < k, of the addition table.
  for (std::uint32_t i = 1; i < sd.k; ++i) {
    for (std::uint32_t j = 0; j < i; ++j) z_exps.push_back(sd.r_seq[i - 1] + sd.s_seq[j]);
  }
  sd.f = t_poly(sd.field, f_exps);
  sd.g = t_poly(sd.field, g_exps);
  sd.w = sd.f * sd.g;
  sd.Z = t_poly(sd.field, z_exps);
  return sd;
}

bool verify_series_identities(const SurfaceData& sd) {
  const FieldPtr& F = sd.field;
  const auto t = SparsePoly::variable(F, 1, 0);
  const auto one = SparsePoly::constant(F, 1, Field::one());
  auto mono = [&](std::uint64_t e) {
    return SparsePoly::monomial(F, 1, {static_cast<std::uint32_t>(e), 0, 0}, Field::one());
  };
  const auto tq1 = mono(sd.q - 1);

  const bool z_ok = sd.Z.frobenius(sd.e) + sd.Z == sd.w;
  const bool f_ok = tq1 * (sd.f + mono(sd.r) - t) == sd.f.frobenius(2 * sd.e);
  const bool g_ok = sd.g + mono(sd.s) - one == tq1 * sd.g.frobenius(2 * sd.e);
  return z_ok && f_ok && g_ok;
}

bool verify_functional_equation(const SurfaceData& sd) {
  const FieldPtr& Fp = sd.field;
  const Field& F = *Fp;
  auto mono = [&](std::uint64_t e) {
    return SparsePoly::monomial(Fp, 1, {static_cast<std::uint32_t>(e), 0, 0}, Field::one());
  };
  const auto t = mono(1);

  const SparsePoly w_q = sd.w.frobenius(sd.e);
  const SparsePoly sigma1 = mono(sd.r) + sd.w + w_q;
  const SparsePoly sigma2 = w_q * sd.w;

  // F(sigma1, sigma2) as a dense polynomial, one factor per zeta in GF(q)^*.
  Dense product{Field::one()};
  for (std::uint32_t code = 1; code < sd.q; ++code) {
    const Fq zeta{code};
    SparsePoly factor = sigma2 - sigma1.scaled(zeta) + SparsePoly::constant(Fp, 1, F.mul(zeta, zeta));
    product = mul_dense_sparse(F, product, factor);
    trim(product);
  }
  Dense lhs = mul_dense_sparse(F, product, t * sd.w);
  trim(lhs);

  const SparsePoly rhs_poly = (mono(sd.r) - t) * (mono(sd.q * sd.r) - t);
  Dense rhs = to_dense(rhs_poly);
  trim(rhs);
  return lhs == rhs;
}

SparsePoly h_plane(const SurfaceData& sd, const FieldElement& b, const FieldElement& c) {
  require_on_plane(sd, b, c);
  const FieldPtr& K = b.field_ptr();
  const auto y = SparsePoly::variable(K, 2, 0);
  const auto bq = b.frobenius(sd.e);
  const SparsePoly left = y.pow(sd.q) - SparsePoly::constant(K, 2, b.raw());
  const SparsePoly right = y - SparsePoly::constant(K, 2, bq.raw());
  const SparsePoly w_cz = sd.w.embed_prime_coeffs(K).substitute_scaled(2, 1, c.raw());
  return left * right - w_cz;
}

SparsePoly h_gk(const SurfaceData& sd, const FieldElement& a, const FieldElement& b,
                const FieldElement& c) {
  require_on_plane(sd, b, c);
  if (!(a.field().spec() == b.field().spec())) throw FieldError("point coordinates in different fields");
  if (a.frobenius(sd.e) + a != b.pow(sd.q + 1)) {
    throw std::invalid_argument("(a, b) is not on x^q + x = y^(q+1)");
  }
  const FieldPtr& K = a.field_ptr();
  SparsePoly h = SparsePoly::variable(K, 3, 0);
  h.add_term({0, 0, 0}, a.raw());
  h.add_term({0, 1, 0}, K->neg(b.raw()));
  h -= sd.Z.embed_prime_coeffs(K).substitute_scaled(3, 2, c.raw());
  return h;
}

SparsePoly reduce_by_gk_relation(const SparsePoly& poly, std::uint32_t q) {
  if (poly.nvars() != 3) throw std::invalid_argument("expected an (x, y, z) polynomial");
  const Field& F = poly.field();
  SparsePoly out(poly.field_ptr(), 3);
  SparsePoly pending = poly;
  while (!pending.is_zero()) {
    SparsePoly next(poly.field_ptr(), 3);
    for (const auto& [e, c] : pending.terms()) {
      if (e[0] < q) {
        out.add_term(e, c);
        continue;
      }
      // x^q = y^(q+1) - x
      next.add_term({e[0] - q, e[1] + q + 1, e[2]}, c);
      next.add_term({e[0] - q + 1, e[1], e[2]}, F.neg(c));
    }
    pending = std::move(next);
  }
  return out;
}

}  // namespace gk
