#include <doctest.h>

#include "gk/curve.hpp"
#include "gk/surface.hpp"

using namespace gk;

using Exps = std::vector<std::uint64_t>;

TEST_CASE("nu = 3 gives w = t^q + t and Z = t") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const SurfaceData sd = build_surface(q, 3);
    CHECK(sd.exponents(sd.w) == Exps{1, q});
    CHECK(sd.exponents(sd.Z) == Exps{1});
    CHECK(sd.r == q * q - q + 1);
    CHECK(sd.s == q * sd.r - 1);
  }
}

TEST_CASE("q = 2, nu = 5") {
  const SurfaceData sd = build_surface(2, 5);
  CHECK(sd.exponents(sd.f) == Exps{1, 3});
  CHECK(sd.exponents(sd.g) == Exps{0, 1, 5});
  CHECK(sd.exponents(sd.Z) == Exps{1, 3, 4});
  CHECK(sd.r == 11);
}

TEST_CASE("identities hold") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (std::uint32_t nu : {1u, 3u, 5u}) {
      const SurfaceData sd = build_surface(q, nu);
      CAPTURE(q);
      CAPTURE(nu);
      CHECK(verify_series_identities(sd));
      CHECK(verify_functional_equation(sd));
    }
  }
}

TEST_CASE("Z^q + Z = w pointwise") {
  // Independent of the polynomial Frobenius: evaluate at every element of GF(q^4).
  for (std::uint32_t q : {2u, 3u}) {
    const SurfaceData sd = build_surface(q, 5);
    const auto pe = as_prime_power(q);
    const FieldPtr K = make_field(pe->first, 4 * pe->second);
    const SparsePoly Z = sd.Z.embed_prime_coeffs(K), w = sd.w.embed_prime_coeffs(K);
    for (std::uint64_t a = 0; a < K->size(); ++a) {
      const Fq t = K->from_index(a);
      const Fq zt = Z.evaluate(std::vector<Fq>{t});
      CHECK(K->add(K->pow(zt, q), zt) == w.evaluate(std::vector<Fq>{t}));
    }
  }
}

TEST_CASE("perturbed data fails the checks") {
  SurfaceData sd = build_surface(3, 5);
  SurfaceData bad = sd;
  bad.w.add_term({2, 0, 0}, Field::one());
  CHECK_FALSE(verify_functional_equation(bad));
  bad = sd;
  bad.Z.add_term({2, 0, 0}, Field::one());
  CHECK_FALSE(verify_series_identities(bad));
  bad = sd;
  bad.f.add_term({0, 0, 0}, Field::one());
  CHECK_FALSE(verify_series_identities(bad));
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(build_surface(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_surface(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_surface(2, 0), std::invalid_argument);
}

TEST_CASE("gk relation rewriting preserves values on the curve") {
  const CurveParams P = make_curve(2, 3, Model::gk);
  const FieldPtr F = P.field;
  const auto x = SparsePoly::variable(F, 3, 0), y = SparsePoly::variable(F, 3, 1), z = SparsePoly::variable(F, 3, 2);
  const SparsePoly f = x.pow(5) * y + x.pow(2) * z.pow(3) + x;
  const SparsePoly g = reduce_by_gk_relation(f, 2);
  CHECK(g.degree_in(0) < 2);
  CHECK(reduce_by_gk_relation(x.pow(2) + x, 2) == y.pow(3));
  int checked = 0;
  for_each_rational_point(P, [&](const AffinePoint& pt) {
    if (pt.at_infinity) return;
    const std::vector<Fq> v{pt.x, pt.y, pt.z};
    CHECK(f.evaluate(v) == g.evaluate(v));
    ++checked;
  });
  CHECK(checked == 224);
}

TEST_CASE("h vanishes at the conjugate point") {
  for (Model model : {Model::plane, Model::gk}) {
    const CurveParams P = make_curve(3, 3, model);
    const SurfaceData sd = build_surface(3, 3);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 5; ++k) {
      const AffinePoint pt = sample_rational_point(P, rng, true);
      const AffinePoint c = conjugate_q_nu(P, pt);
      const FieldElement a(P.field, c.x), b(P.field, c.y), g(P.field, c.z);
      const SparsePoly h = model == Model::gk ? h_gk(sd, a, b, g) : h_plane(sd, b, g);
      const std::vector<Fq> at = model == Model::gk ? std::vector<Fq>{pt.x, pt.y, pt.z} : std::vector<Fq>{pt.y, pt.z};
      CHECK(Field::is_zero(h.evaluate(at)));
    }
    const FieldElement one(P.field, Field::one());
    CHECK_THROWS_AS(h_plane(sd, one, one), std::invalid_argument);
  }
}
