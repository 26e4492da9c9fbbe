#pragma once

// Riemann-Roch spaces L(a inf + b Q) from the two-point free basis:
// every function is f * h^k with f a basis row and h of divisor m(Q - inf).

#include <cstdint>
#include <memory>
#include <vector>

#include "gk/basis.hpp"
#include "gk/curve.hpp"
#include "gk/surface.hpp"

namespace gk {

enum class HKind { x_origin, y_minus_beta, h_gk, h_plane };

struct HFunction {
  HKind kind;
  SparsePoly poly;  // in (y, z) or (x, y, z)
  std::uint64_t m;  // pole order at infinity = vanishing order at Q
};

/// x at the gk origin, y - beta on the plane model at z = 0, otherwise h_gk
/// or h_plane built from Q^(q^nu). The order at Q is checked by expansion.
/// Other gk points with z = 0 are rejected.
HFunction h_function(const CurveParams& params, const AffinePoint& Q, const SurfaceData& sd);

/// Free basis at Q: build_basis for z != 0, the monomial tables otherwise.
BasisTable two_point_basis(const CurveParams& params, const AffinePoint& Q);

struct RRFunction {
  std::size_t row = 0;     // index into the table rows
  std::int64_t k = 0;      // power of h
  std::int64_t pole = 0;   // pole order at infinity
  std::int64_t order = 0;  // order at Q (negative for a pole)
};

struct RRBasis {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::shared_ptr<const BasisTable> table;
  std::shared_ptr<const HFunction> h;
  std::vector<RRFunction> functions;

  std::size_t dim() const noexcept { return functions.size(); }
};

RRBasis basis_of_L(std::int64_t a, std::int64_t b, std::shared_ptr<const BasisTable> table,
                   std::shared_ptr<const HFunction> h);

std::size_t dim_L(std::int64_t a, std::int64_t b, const BasisTable& table, const HFunction& h);

/// dim L = a + b + 1 - g whenever a + b >= 2g - 1; true otherwise.
bool riemann_roch_check(std::int64_t a, std::int64_t b, const BasisTable& table, const HFunction& h);

/// Value of one basis function at an affine point other than Q.
Fq evaluate_function(const RRBasis& rr, const RRFunction& fn, const AffinePoint& pt);

using Matrix = std::vector<std::vector<Fq>>;

/// Rows are functions, columns are points; Q and infinity are rejected.
Matrix generator_matrix(const RRBasis& rr, const std::vector<AffinePoint>& points);

std::size_t rank(Matrix mat, const Field& field);

/// The rational points other than Q and infinity.
std::vector<AffinePoint> evaluation_points(const CurveParams& params, const AffinePoint& Q);

}  // namespace gk
