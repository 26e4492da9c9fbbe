#pragma once

// Generalized GK-curves.
//
//   plane model:  y^(q^2) - y = z^r
//   gk model:     x^q + x = y^(q+1),  y^(q^2) - y = z^r
//
// with r = (q^nu + 1)/(q + 1), nu odd. Points live in an ambient field
// GF(q^(2 nu d)); the rational points are the ones with coordinates in the
// subfield GF(q^(2 nu)).

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "gk/gf.hpp"
#include "gk/series.hpp"

namespace gk {

enum class Model { plane, gk };

std::string to_string(Model m);
Model parse_model(const std::string& s);

struct CurveParams {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 0;  // q = p^e
  std::uint32_t nu = 0;
  std::uint64_t r = 0;
  Model model = Model::plane;
  std::uint64_t genus = 0;
  std::uint64_t m = 0;           // q^nu + 1
  std::uint32_t ext_degree = 1;  // d
  FieldPtr field;                // GF(q^(2 nu d))

  /// p-exponent of the q^(2 nu)-Frobenius.
  std::uint32_t rational_frob() const noexcept { return 2 * e * nu; }
  /// Degree over GF(p) of the rational subfield GF(q^(2 nu)).
  std::uint32_t rational_degree() const noexcept { return 2 * e * nu; }
  std::uint64_t q_pow_nu() const noexcept { return m - 1; }
};

/// Throws std::invalid_argument for bad q, nu or a too large ambient field.
CurveParams make_curve(std::uint32_t q, std::uint32_t nu, Model model, std::uint32_t ext_degree = 1);

std::uint64_t genus(std::uint32_t q, std::uint32_t nu, Model model);
/// q^(2 nu) + 1 + 2 g q^nu.
std::uint64_t hasse_weil_max(const CurveParams& params);

/// Pole orders at infinity. The gk value for x comes from q v(x) = (q+1) v(y).
struct PoleOrders {
  std::uint64_t x = 0, y = 0, z = 0;
};
PoleOrders pole_orders(const CurveParams& params);

struct AffinePoint {
  bool at_infinity = false;
  Fq x{}, y{}, z{};  // x unused on the plane model

  static AffinePoint infinity() { return {true, {}, {}, {}}; }
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

bool is_on_curve(const CurveParams& params, const AffinePoint& pt);
bool is_rational(const CurveParams& params, const AffinePoint& pt);
std::string to_string(const CurveParams& params, const AffinePoint& pt);

/// Calls `visit` once for every rational point, infinity included (last).
/// Returns the number of points.
std::uint64_t for_each_rational_point(const CurveParams& params,
                                      const std::function<void(const AffinePoint&)>& visit);
std::uint64_t count_points(const CurveParams& params);
std::vector<AffinePoint> rational_points(const CurveParams& params);

struct MaximalityReport {
  std::uint64_t count = 0;
  std::uint64_t bound = 0;
  bool maximal = false;
};
MaximalityReport verify_maximality(const CurveParams& params);

/// Coordinate-wise q^(2 nu)-th power.
AffinePoint frobenius_point(const CurveParams& params, const AffinePoint& pt);

/// A point whose coordinates are the point's coordinates raised to q^nu.
AffinePoint conjugate_q_nu(const CurveParams& params, const AffinePoint& pt);

/// Uniform-ish sampling: a random z is drawn until the y equation is solvable,
/// then y and (gk) x are drawn among the solutions.
AffinePoint sample_rational_point(const CurveParams& params, std::mt19937_64& rng, bool gamma_nonzero);
/// Requires ext_degree >= 2; z is drawn outside the rational subfield.
AffinePoint sample_nonrational_point(const CurveParams& params, std::mt19937_64& rng);

/// The point with dense-index coordinates (y, z) or (x, y, z).
AffinePoint point_from_indices(const CurveParams& params, const std::vector<std::uint64_t>& idx);
std::vector<std::uint64_t> point_indices(const CurveParams& params, const AffinePoint& pt);

struct SurfaceData;

struct EquivalenceReport {
  bool rational = false;
  Valuation order_at_point;
  Valuation order_at_conjugate;  // only meaningful when !rational
  std::uint64_t expected_at_point = 0;
  std::uint64_t expected_at_conjugate = 0;
  bool ok = false;
};

/// Vanishing orders of h (built from P^(q^nu)) at P and at its Frobenius image.
EquivalenceReport verify_fundamental_equivalence(const CurveParams& params, const AffinePoint& pt,
                                                 const SurfaceData& sd);

}  // namespace gk
