#include "gk/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "gk/basis.hpp"
#include "gk/expansion.hpp"

namespace gk {

using nlohmann::json;

namespace {

const char* const kVarNames[3][3] = {{"t", "", ""}, {"y", "z", ""}, {"x", "y", "z"}};

std::string power_label(const char* var, std::uint32_t e) {
  if (e == 0) return "1";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

json curve_header(const BasisTable& t) {
  const auto& P = t.params;
  return {{"schema_version", kSchemaVersion},
          {"q", P.q},
          {"nu", P.nu},
          {"model", to_string(P.model)},
          {"ext_degree", P.ext_degree},
          {"point", point_indices(P, t.point)},
          {"m", t.m}};
}

std::vector<std::vector<std::uint64_t>> grid(const BasisTable& t, bool poles) {
  std::vector<std::vector<std::uint64_t>> g(t.z_count(), std::vector<std::uint64_t>(t.y_count(), 0));
  for (const auto& row : t.rows) g[row.j][row.i] = poles ? row.pole : row.vanish;
  return g;
}

std::string text_grid_pair(const BasisTable& t) {
  const auto pg = grid(t, true), vg = grid(t, false);
  const std::uint32_t ny = t.y_count(), nz = t.z_count();
  auto width = [](const std::vector<std::vector<std::uint64_t>>& g) {
    std::size_t w = 3;
    for (const auto& r : g)
      for (auto v : r) w = std::max(w, std::to_string(v).size());
    return w + 1;
  };
  const std::size_t lw = std::max<std::size_t>(power_label("Z", nz - 1).size(), 4) + 1;
  const std::size_t pw = std::max(width(pg), power_label("Y", ny - 1).size() + 1);
  const std::size_t vw = std::max(width(vg), power_label("Y", ny - 1).size() + 1);
  std::ostringstream os;
  auto header = [&](std::size_t w) {
    for (std::uint32_t i = 0; i < ny; ++i) os << std::setw(static_cast<int>(w)) << power_label("Y", i);
  };
  os << std::left << std::setw(static_cast<int>(lw)) << "pole" << std::right;
  header(pw);
  os << "   " << std::left << std::setw(static_cast<int>(lw)) << "vanish" << std::right;
  header(vw);
  os << '\n';
  for (std::uint32_t j = 0; j < nz; ++j) {
    os << std::left << std::setw(static_cast<int>(lw)) << power_label("Z", j) << std::right;
    for (auto v : pg[j]) os << std::setw(static_cast<int>(pw)) << v;
    os << "   " << std::left << std::setw(static_cast<int>(lw)) << power_label("Z", j) << std::right;
    for (auto v : vg[j]) os << std::setw(static_cast<int>(vw)) << v;
    os << '\n';
  }
  return os.str();
}

std::string csv_grid(const BasisTable& t, bool poles) {
  std::ostringstream os;
  os << (poles ? "pole" : "vanish");
  for (std::uint32_t i = 0; i < t.y_count(); ++i) os << ',' << power_label("Y", i);
  os << '\n';
  const auto g = grid(t, poles);
  for (std::uint32_t j = 0; j < g.size(); ++j) {
    os << power_label("Z", j);
    for (auto v : g[j]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace

json to_json(const FieldSpec& spec) { return {{"p", spec.p}, {"m", spec.m}, {"modulus", spec.modulus}}; }

FieldSpec field_spec_from_json(const json& j) {
  FieldSpec s;
  s.p = j.at("p").get<std::uint32_t>();
  s.m = j.at("m").get<std::uint32_t>();
  s.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  return s;
}

json to_json(const SparsePoly& poly) {
  json vars = json::array();
  for (unsigned v = 0; v < poly.nvars(); ++v) vars.push_back(kVarNames[poly.nvars() - 1][v]);
  json terms = json::array();
  for (const auto& [e, c] : poly.terms()) {
    terms.push_back(json::array({std::vector<std::uint32_t>(e.begin(), e.begin() + poly.nvars()),
                                 poly.field().to_index(c)}));
  }
  return {{"vars", vars}, {"terms", terms}};
}

SparsePoly poly_from_json(const json& j, FieldPtr field) {
  const auto nvars = static_cast<unsigned>(j.at("vars").size());
  if (nvars < 1 || nvars > 3) throw std::invalid_argument("polynomial must have 1 to 3 variables");
  SparsePoly out(field, nvars);
  for (const auto& term : j.at("terms")) {
    const auto exps = term.at(0).get<std::vector<std::uint32_t>>();
    if (exps.size() != nvars) throw std::invalid_argument("exponent vector has the wrong length");
    const auto idx = term.at(1).get<std::uint64_t>();
    if (idx >= field->size()) throw std::invalid_argument("coefficient index out of range");
    SparsePoly::Exponents e{0, 0, 0};
    std::copy(exps.begin(), exps.end(), e.begin());
    out.add_term(e, field->from_index(idx));
  }
  return out;
}

json to_json(const TruncatedSeries& s) {
  json out = json::array();
  for (Fq c : s.coeffs()) out.push_back(s.field().to_index(c));
  return out;
}

std::string export_table(const BasisTable& t, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::text: {
      os << "# q=" << t.params.q << " nu=" << t.params.nu << " model=" << to_string(t.params.model)
         << " Q=" << to_string(t.params, t.point) << " m=" << t.m << " reductions=" << t.reductions << '\n';
      os << std::setw(6) << "i" << std::setw(6) << "j" << std::setw(10) << "pole" << std::setw(8) << "vanish" << '\n';
      for (const auto& row : t.rows) {
        os << std::setw(6) << row.i << std::setw(6) << row.j << std::setw(10) << row.pole << std::setw(8)
           << row.vanish << '\n';
      }
      break;
    }
    case TableFormat::csv:
      os << "i,j,pole,vanish\n";
      for (const auto& row : t.rows) os << row.i << ',' << row.j << ',' << row.pole << ',' << row.vanish << '\n';
      break;
    case TableFormat::json: {
      json doc = curve_header(t);
      doc["kind"] = "basis_table";
      doc["field"] = to_json(t.params.field->spec());
      doc["reductions"] = t.reductions;
      json rows = json::array();
      for (const auto& row : t.rows) {
        rows.push_back({{"i", row.i}, {"j", row.j}, {"pole", row.pole}, {"vanish", row.vanish}, {"rep", to_json(row.rep)}});
      }
      doc["rows"] = rows;
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::string export_grids(const BasisTable& t, TableFormat format) {
  switch (format) {
    case TableFormat::text:
      return text_grid_pair(t);
    case TableFormat::csv:
      return csv_grid(t, true) + "\n" + csv_grid(t, false);
    case TableFormat::json: {
      json doc = curve_header(t);
      doc["kind"] = "grids";
      json cols = json::array(), rows = json::array();
      for (std::uint32_t i = 0; i < t.y_count(); ++i) cols.push_back(power_label("Y", i));
      for (std::uint32_t j = 0; j < t.z_count(); ++j) rows.push_back(power_label("Z", j));
      doc["columns"] = cols;
      doc["rows"] = rows;
      doc["pole"] = grid(t, true);
      doc["vanish"] = grid(t, false);
      return doc.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("unknown format");
}

BasisTable import_table_json(const std::string& text) {
  const json doc = json::parse(text);
  if (doc.at("schema_version").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported schema version");
  if (doc.value("kind", "") != "basis_table") throw std::invalid_argument("document is not a basis table");
  const FieldPtr field = field_from_spec(field_spec_from_json(doc.at("field")));
  const CurveParams P = make_curve(doc.at("q").get<std::uint32_t>(), doc.at("nu").get<std::uint32_t>(),
                                   parse_model(doc.at("model").get<std::string>()),
                                   doc.at("ext_degree").get<std::uint32_t>());
  if (!(P.field->spec() == field->spec())) throw std::invalid_argument("field does not match the curve");
  const AffinePoint Q = point_from_indices(P, doc.at("point").get<std::vector<std::uint64_t>>());
  const auto m = doc.at("m").get<std::uint64_t>();
  const LocalChart chart = make_chart(P, Q, std::max<std::uint64_t>(m, 2));

  BasisTable t{P, Q, m, {}, doc.at("reductions").get<std::uint64_t>()};
  for (const auto& r : doc.at("rows")) {
    SparsePoly rep = poly_from_json(r.at("rep"), P.field);
    if (rep.nvars() != 2) throw std::invalid_argument("representatives must be (y, z) polynomials");
    TruncatedSeries s = evaluate_in_chart(rep, chart).truncated(m);
    const auto vanish = r.at("vanish").get<std::uint64_t>();
    if (s.valuation() != Valuation::exactly(vanish)) throw std::invalid_argument("stored vanishing order does not match");
    t.rows.push_back(BasisRow{r.at("i").get<std::uint32_t>(), r.at("j").get<std::uint32_t>(),
                              r.at("pole").get<std::uint64_t>(), vanish, std::move(rep), std::move(s)});
  }
  if (t.rows.size() != m) throw std::invalid_argument("row count differs from m");
  return t;
}

}  // namespace gk
