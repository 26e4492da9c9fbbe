#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gk/basis.hpp"
#include "gk/rr.hpp"

using namespace gk;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BasisTable table_at_sample(std::uint32_t q, std::uint32_t nu, Model model, std::uint64_t seed) {
  const CurveParams P = make_curve(q, nu, model);
  std::mt19937_64 rng(seed);
  return build_basis(P, make_chart(P, sample_rational_point(P, rng, true)));
}

// Re-expands every representative in a fresh chart and recomputes both orders.
void check_rows_independently(const BasisTable& t) {
  const CurveParams& P = t.params;
  const PoleOrders po = pole_orders(P);
  const LocalChart ch = make_chart(P, t.point, t.m + 5);
  std::vector<std::uint64_t> vanish;
  for (const auto& row : t.rows) {
    CHECK(vanishing_order(row.rep, ch) == Valuation::exactly(row.vanish));
    std::uint64_t top = 0;
    for (const auto& [e, c] : row.rep.terms()) top = std::max(top, e[0] * po.y + e[1] * po.z);
    CHECK(top == row.pole);
    CHECK(row.rep.coeff({row.i, row.j, 0}) == Field::one());
    CHECK(row.pole == row.i * po.y + row.j * po.z);
    vanish.push_back(row.vanish);
  }
  std::sort(vanish.begin(), vanish.end());
  for (std::uint64_t k = 0; k < t.m; ++k) CHECK(vanish[k] == k);
}

}  // namespace

TEST_CASE("monomial order") {
  const CurveParams P = make_curve(2, 3, Model::plane);
  const auto mons = monomial_order(P);
  REQUIRE(mons.size() == 9);
  CHECK(mons[0].pole == 0);
  CHECK(mons[1].i == 1);
  CHECK(mons[1].pole == 3);
  CHECK(mons[2].j == 1);
  CHECK(mons[2].pole == 4);
  CHECK(mons.back().pole == 14);
}

TEST_CASE("plane tables match the golden grids") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (std::uint64_t seed : {0u, 1u}) {
      const BasisTable t = table_at_sample(q, 3, Model::plane, seed);
      CHECK(export_grids(t, TableFormat::csv) == slurp(std::string(GK_GOLDEN_DIR) + "/tables_q" + std::to_string(q) + ".csv"));
    }
  }
}

TEST_CASE("rows are complete, symmetric and reproducible") {
  for (Model model : {Model::plane, Model::gk}) {
    for (auto [q, nu] : {std::pair{2u, 3u}, {3u, 3u}, {2u, 5u}}) {
      CAPTURE(q);
      CAPTURE(nu);
      const BasisTable t = table_at_sample(q, nu, model, 7);
      CHECK(t.rows.size() == t.m);
      CHECK(verify_symmetry(t));
      check_rows_independently(t);
    }
  }
}

TEST_CASE("direct seeding gives the same table") {
  for (Model model : {Model::plane, Model::gk}) {
    for (std::uint32_t q : {2u, 3u}) {
      const CurveParams P = make_curve(q, 3, model);
      std::mt19937_64 rng(q);
      const LocalChart ch = make_chart(P, sample_rational_point(P, rng, true));
      const BasisTable a = build_basis(P, ch, Seeding::incremental);
      const BasisTable b = build_basis(P, ch, Seeding::direct);
      CHECK(a == b);
      for (std::size_t k = 0; k < a.rows.size(); ++k) CHECK(a.rows[k].rep == b.rows[k].rep);
    }
  }
}

TEST_CASE("tables at points with z = 0") {
  const CurveParams G = make_curve(2, 3, Model::gk);
  const BasisTable o = two_point_basis(G, AffinePoint{});
  CHECK(o.m == 9);
  check_rows_independently(o);

  const CurveParams C = make_curve(3, 3, Model::plane);
  const AffinePoint beta0 = point_from_indices(C, {1, 0});
  const BasisTable b = two_point_basis(C, beta0);
  CHECK(b.m == C.r);
  check_rows_independently(b);

  // another short-orbit point on the gk model
  std::optional<AffinePoint> other;
  for_each_rational_point(G, [&](const AffinePoint& pt) {
    if (!pt.at_infinity && Field::is_zero(pt.z) && !Field::is_zero(pt.x)) other = pt;
  });
  REQUIRE(other);
  CHECK_THROWS_AS(two_point_basis(G, *other), std::invalid_argument);
  CHECK_THROWS_AS(build_basis(G, make_chart(G, AffinePoint{})), std::invalid_argument);
}

TEST_CASE("json round trip") {
  const BasisTable t = table_at_sample(3, 3, Model::gk, 2);
  const std::string doc = export_table(t, TableFormat::json);
  const BasisTable back = import_table_json(doc);
  CHECK(back == t);
  CHECK(export_table(back, TableFormat::json) == doc);

  auto j = nlohmann::json::parse(doc);
  j["rows"][3]["vanish"] = j["rows"][3]["vanish"].get<int>() + 1;
  CHECK_THROWS(import_table_json(j.dump()));
  j = nlohmann::json::parse(doc);
  j["field"]["modulus"][0] = (j["field"]["modulus"][0].get<int>() + 1) % 3;
  CHECK_THROWS_AS(import_table_json(j.dump()), FieldError);
  j = nlohmann::json::parse(doc);
  j["schema_version"] = 99;
  CHECK_THROWS_AS(import_table_json(j.dump()), std::invalid_argument);
  CHECK_THROWS(import_table_json("{"));
}

TEST_CASE("export formats") {
  const BasisTable t = table_at_sample(2, 3, Model::plane, 0);
  const std::string csv = export_table(t, TableFormat::csv);
  CHECK(csv.rfind("i,j,pole,vanish\n0,0,0,0\n1,0,3,1\n", 0) == 0);
  const std::string text = export_table(t, TableFormat::text);
  CHECK(text.rfind("# q=2 nu=3 model=plane", 0) == 0);
  const auto grids = nlohmann::json::parse(export_grids(t, TableFormat::json));
  CHECK(grids["pole"][2][2] == 14);
  CHECK(grids["vanish"][1][0] == 2);
  CHECK(grids["schema_version"] == 1);
  CHECK(parse_format("csv") == TableFormat::csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
