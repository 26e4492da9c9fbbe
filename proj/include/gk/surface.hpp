#pragma once

// The explicit surface x + a = b y + Z(c z) that cuts a generalized GK-curve
// in a point and its Frobenius conjugate, together with its plane-model
// trace h = (y^q - b)(y - b^q) - w(c z).

#include <cstdint>
#include <vector>

#include "gk/gf.hpp"
#include "gk/series.hpp"

namespace gk {

struct SurfaceData {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 0;  // q = p^e
  std::uint32_t nu = 0;
  std::uint32_t k = 0;  // (nu + 1) / 2 series terms
  std::vector<std::uint64_t> r_seq;  // r_1 .. r_k
  std::vector<std::uint64_t> s_seq;  // s_0 .. s_k
  std::uint64_t r = 0;               // r_k = (q^nu + 1) / (q + 1)
  std::uint64_t s = 0;               // s_k = q r - 1
  FieldPtr field;                    // GF(q)
  SparsePoly f, g, w, Z;             // polynomials in t

  std::vector<std::uint64_t> exponents(const SparsePoly& poly) const;
};

/// f, g, w = f g and Z with Z^q + Z = w for odd nu >= 1.
SurfaceData build_surface(std::uint32_t q, std::uint32_t nu);

/// Exact check of t w F(t^r + w + w^q, w^(q+1)) = (t^r - t)(t^(qr) - t) with
/// F(S, P) = prod over zeta in GF(q)^* of (P - zeta S + zeta^2).
bool verify_functional_equation(const SurfaceData& sd);

/// Z^q + Z = f g, t^(q-1)(f + t^r - t) = f^(q^2), g + t^s - 1 = t^(q-1) g^(q^2).
bool verify_series_identities(const SurfaceData& sd);

/// (y^q - b)(y - b^q) - w(c z) over the field of b; requires b^(q^2) - b = c^r.
SparsePoly h_plane(const SurfaceData& sd, const FieldElement& b, const FieldElement& c);

/// x + a - b y - Z(c z); requires (a, b, c) on the GK model.
SparsePoly h_gk(const SurfaceData& sd, const FieldElement& a, const FieldElement& b,
                const FieldElement& c);

/// Rewrites x^q as y^(q+1) - x until the x-degree is below q.
SparsePoly reduce_by_gk_relation(const SparsePoly& poly, std::uint32_t q);

}  // namespace gk
