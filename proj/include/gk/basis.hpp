#pragma once

// Two-point free basis {f_ij} by pivot-restricted elimination.
//
// Monomials y^i z^j (0 <= i <= q, 0 <= j < r) are taken in order of pole
// order at infinity. Row (i, j) is seeded from an earlier row times y (or z),
// expanded at Q, and cleared at every earlier pivot using earlier rows only.
// The first surviving coefficient is the vanishing order of f_ij at Q.
//
// Representatives are kept reduced modulo the curve and the function h with
// divisor m(Q - infinity), so they always lie in span{y^i z^j}.

#include <cstdint>
#include <string>
#include <vector>

#include "gk/curve.hpp"
#include "gk/expansion.hpp"
#include "gk/series.hpp"

namespace gk {

struct MonomialEntry {
  std::uint32_t i = 0;  // power of y
  std::uint32_t j = 0;  // power of z
  std::uint64_t pole = 0;
};

/// All y^i z^j, i <= q, j < r, sorted by pole order; throws on a tie.
std::vector<MonomialEntry> monomial_order(const CurveParams& params);

struct BasisRow {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint64_t pole = 0;
  std::uint64_t vanish = 0;
  SparsePoly rep;          // f_ij in (y, z)
  TruncatedSeries series;  // f_ij at Q modulo t^m
};

struct BasisTable {
  CurveParams params;
  AffinePoint point;
  std::uint64_t m = 0;  // number of rows and series columns
  std::vector<BasisRow> rows;
  std::uint64_t reductions = 0;  // row operations spent clearing pivots

  const BasisRow& at(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t y_count() const;  // columns of the grid
  std::uint32_t z_count() const;  // rows of the grid
};

bool operator==(const BasisRow& a, const BasisRow& b);
bool operator==(const BasisTable& a, const BasisTable& b);

enum class Seeding { incremental, direct };

/// Requires a gamma != 0 chart of precision >= q^nu + 1 on the table's curve.
BasisTable build_basis(const CurveParams& params, const LocalChart& chart,
                       Seeding seeding = Seeding::incremental);

/// Pairs a <-> 2g - 1 + m - a and checks b + b' = m - 1 and the largest pole.
bool verify_symmetry(const BasisTable& table);

enum class TableFormat { text, csv, json };
TableFormat parse_format(const std::string& s);

/// Row list (i, j, pole, vanish); json adds field spec, point and representatives.
std::string export_table(const BasisTable& table, TableFormat format);
/// The pole and vanishing grids side by side (text), as two CSV blocks, or as JSON.
std::string export_grids(const BasisTable& table, TableFormat format);
/// Inverse of export_table(..., json). The field spec is validated and the
/// series are recomputed from the representatives.
BasisTable import_table_json(const std::string& doc);

namespace detail {

/// Everything that distinguishes the general elimination from the special
/// tables at points with gamma = 0.
struct EliminationSetup {
  std::vector<MonomialEntry> monomials;  // in row order
  std::uint32_t y_bound = 0;             // largest y exponent kept
  SparsePoly y_rule;                     // y^(y_bound + 1) == y_rule modulo (curve, h)
  std::uint64_t m = 0;
};

BasisTable eliminate(const CurveParams& params, const LocalChart& chart, const EliminationSetup& setup,
                     Seeding seeding);

/// y^(q+1) - h_plane for the point conj = Q^(q^nu), in (y, z).
SparsePoly plane_y_rule(const CurveParams& params, const AffinePoint& conj);

}  // namespace detail

}  // namespace gk
