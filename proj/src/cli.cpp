#include "gk/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "gk/basis.hpp"
#include "gk/curve.hpp"
#include "gk/expansion.hpp"
#include "gk/io.hpp"
#include "gk/rr.hpp"
#include "gk/semigroup.hpp"
#include "gk/surface.hpp"

namespace gk::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::optional<std::uint32_t> q;
  std::uint32_t nu = 3;
  std::string model = "gk";
  std::string point = "sample";
  std::uint32_t ext_degree = 1;
  std::size_t precision = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string cache_dir;
  bool long_run = false;
  std::optional<std::int64_t> a, b;
  std::uint32_t samples = 20;
  std::string function = "coords";
  std::string at = "Q";
};

std::uint32_t need_q(const RunConfig& c) {
  if (!c.q) throw UsageError("--q is required");
  return *c.q;
}

CurveParams curve_of(const RunConfig& c) {
  return make_curve(need_q(c), c.nu, parse_model(c.model), c.ext_degree);
}

AffinePoint parse_point(const CurveParams& P, const std::string& sel, std::mt19937_64& rng) {
  if (sel == "origin") return AffinePoint{};
  if (sel == "sample") return sample_rational_point(P, rng, true);
  std::vector<std::uint64_t> idx;
  std::stringstream ss(sel);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      idx.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad --point '" + sel + "' (expected origin, sample or comma-separated indices)");
    }
  }
  return point_from_indices(P, idx);
}

std::string join(const std::vector<std::uint64_t>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

std::string angle(const std::vector<std::uint64_t>& gens) { return "<" + join(gens, ',') + ">"; }

json header(const CurveParams& P) {
  return {{"schema_version", kSchemaVersion}, {"q", P.q}, {"nu", P.nu}, {"model", to_string(P.model)}};
}

// Basis tables, optionally cached as JSON keyed by curve and point.
BasisTable obtain_table(const CurveParams& P, const AffinePoint& Q, const RunConfig& c, std::ostream& err) {
  fs::path file;
  if (!c.cache_dir.empty()) {
    const auto idx = point_indices(P, Q);
    file = fs::path(c.cache_dir) / ("basis-p" + std::to_string(P.p) + "-e" + std::to_string(P.e) + "-nu" +
                                    std::to_string(P.nu) + "-" + to_string(P.model) + "-d" +
                                    std::to_string(P.ext_degree) + "-" + join(idx, '_') + ".json");
    if (fs::exists(file)) {
      try {
        std::ifstream in(file);
        std::stringstream buf;
        buf << in.rdbuf();
        BasisTable t = import_table_json(buf.str());
        if (t.params.q == P.q && t.params.nu == P.nu && t.params.model == P.model && t.point == Q) return t;
        err << "warning: cache entry " << file.string() << " is for another curve; rebuilding\n";
      } catch (const std::exception& e) {
        err << "warning: ignoring cache entry " << file.string() << ": " << e.what() << '\n';
      }
    }
  }
  BasisTable t = two_point_basis(P, Q);
  if (!file.empty()) {
    fs::create_directories(file.parent_path());
    const fs::path tmp = file.string() + ".tmp." + std::to_string(::getpid());
    {
      std::ofstream o(tmp, std::ios::binary);
      o << export_table(t, TableFormat::json);
      if (!o) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, file);
  }
  return t;
}

int cmd_field_info(const RunConfig& c, std::ostream& out) {
  const std::uint32_t q = need_q(c);
  FieldPtr F;
  if (c.nu == 0) {
    auto pe = as_prime_power(q);
    if (!pe) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
    F = make_field(pe->first, pe->second);
  } else {
    F = curve_of(c).field;
  }
  const auto& s = F->spec();
  const auto fmt = parse_format(c.format);
  if (fmt == TableFormat::json) {
    json doc{{"schema_version", kSchemaVersion}, {"field", to_json(s)}, {"size", F->size()},
             {"primitive_index", F->to_index(F->generator())}};
    out << doc.dump(2) << '\n';
  } else if (fmt == TableFormat::csv) {
    out << "p,m,size,primitive_index,modulus\n"
        << s.p << ',' << s.m << ',' << F->size() << ',' << F->to_index(F->generator()) << ','
        << join(std::vector<std::uint64_t>(s.modulus.begin(), s.modulus.end()), ' ') << '\n';
  } else {
    out << "GF(" << s.p << "^" << s.m << "), " << F->size() << " elements\n"
        << "modulus (constant term first): " << join(std::vector<std::uint64_t>(s.modulus.begin(), s.modulus.end()), ' ')
        << "\nprimitive element index: " << F->to_index(F->generator()) << '\n';
  }
  return kOk;
}

int cmd_surface(const RunConfig& c, std::ostream& out) {
  const SurfaceData sd = build_surface(need_q(c), c.nu);
  const auto fmt = parse_format(c.format);
  if (fmt == TableFormat::json) {
    json doc{{"schema_version", kSchemaVersion}, {"q", sd.q}, {"nu", sd.nu},
             {"f", sd.exponents(sd.f)}, {"g", sd.exponents(sd.g)}, {"w", sd.exponents(sd.w)}, {"Z", sd.exponents(sd.Z)}};
    out << doc.dump(2) << '\n';
  } else if (fmt == TableFormat::csv) {
    out << "poly,exponent\n";
    for (const auto& [name, poly] : {std::pair{"f", &sd.f}, {"g", &sd.g}, {"w", &sd.w}, {"Z", &sd.Z}}) {
      for (auto e : sd.exponents(*poly)) out << name << ',' << e << '\n';
    }
  } else {
    out << "q=" << sd.q << " nu=" << sd.nu << " r=" << sd.r << " s=" << sd.s << '\n'
        << "f = " << sd.f.to_string() << '\n'
        << "g = " << sd.g.to_string() << '\n'
        << "w = " << sd.w.to_string() << '\n'
        << "Z = " << sd.Z.to_string() << '\n';
  }
  return kOk;
}

int cmd_verify_identity(const RunConfig& c, std::ostream& out) {
  const SurfaceData sd = build_surface(need_q(c), c.nu);
  const bool fe = verify_functional_equation(sd);
  const bool si = verify_series_identities(sd);
  if (parse_format(c.format) == TableFormat::json) {
    json doc{{"schema_version", kSchemaVersion}, {"q", sd.q}, {"nu", sd.nu},
             {"functional_equation", fe}, {"series_identities", si}};
    out << doc.dump(2) << '\n';
  } else {
    out << (fe && si ? "OK" : "FAIL") << '\n';
  }
  return fe && si ? kOk : kVerificationFailed;
}

int cmd_count(const RunConfig& c, std::ostream& out, bool strict) {
  const CurveParams P = curve_of(c);
  const auto rep = verify_maximality(P);
  const auto fmt = parse_format(c.format);
  if (fmt == TableFormat::json) {
    json doc = header(P);
    doc["genus"] = P.genus;
    doc["N"] = rep.count;
    doc["hasse_weil_max"] = rep.bound;
    doc["maximal"] = rep.maximal;
    out << doc.dump(2) << '\n';
  } else if (fmt == TableFormat::csv) {
    out << "q,nu,model,genus,N,hasse_weil_max,maximal\n"
        << P.q << ',' << P.nu << ',' << to_string(P.model) << ',' << P.genus << ',' << rep.count << ','
        << rep.bound << ',' << (rep.maximal ? "true" : "false") << '\n';
  } else {
    out << "q=" << P.q << " nu=" << P.nu << " model=" << to_string(P.model) << " genus=" << P.genus
        << " N=" << rep.count << " hasse_weil_max=" << rep.bound << (rep.maximal ? " maximal" : " not maximal")
        << '\n';
  }
  return strict && !rep.maximal ? kVerificationFailed : kOk;
}

int cmd_expand(const RunConfig& c, std::ostream& out) {
  const CurveParams P = curve_of(c);
  std::mt19937_64 rng(c.seed);
  const AffinePoint Q = parse_point(P, c.point, rng);
  const LocalChart chart = make_chart(P, Q, c.precision);
  std::vector<std::pair<std::string, TruncatedSeries>> series;
  if (c.function == "coords") {
    series.emplace_back("z", chart.z);
    series.emplace_back("y", chart.y);
    if (chart.x) series.emplace_back("x", *chart.x);
  } else if (c.function == "h") {
    const HFunction h = h_function(P, Q, build_surface(P.q, P.nu));
    series.emplace_back("h", evaluate_in_chart(h.poly, chart));
  } else {
    throw UsageError("unknown --function '" + c.function + "' (expected coords or h)");
  }
  const auto fmt = parse_format(c.format);
  const char* kind = chart.kind == ChartKind::gamma_nonzero ? "gamma_nonzero" : "gamma_zero";
  if (fmt == TableFormat::json) {
    json doc = header(P);
    doc["point"] = point_indices(P, Q);
    doc["chart"] = kind;
    doc["precision"] = chart.precision;
    json s = json::object();
    for (const auto& [name, ser] : series) s[name] = {{"coeffs", to_json(ser)}, {"valuation", to_string(ser.valuation())}};
    doc["series"] = s;
    out << doc.dump(2) << '\n';
  } else if (fmt == TableFormat::csv) {
    out << "series,degree,coeff\n";
    for (const auto& [name, ser] : series)
      for (std::size_t k = 0; k < ser.precision(); ++k) out << name << ',' << k << ',' << P.field->to_index(ser[k]) << '\n';
  } else {
    out << "point " << to_string(P, Q) << " chart " << kind << " precision " << chart.precision << '\n';
    for (const auto& [name, ser] : series) {
      out << name << " (valuation " << to_string(ser.valuation()) << "):";
      for (Fq v : ser.coeffs()) out << ' ' << P.field->to_index(v);
      out << '\n';
    }
  }
  return kOk;
}

int cmd_basis(const RunConfig& c, std::ostream& out, std::ostream& err, bool grids) {
  const CurveParams P = curve_of(c);
  std::mt19937_64 rng(c.seed);
  const AffinePoint Q = parse_point(P, c.point, rng);
  const auto fmt = parse_format(c.format);
  const BasisTable t = obtain_table(P, Q, c, err);
  out << (grids ? export_grids(t, fmt) : export_table(t, fmt));
  return kOk;
}

int cmd_semigroup(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const CurveParams P = curve_of(c);
  SemigroupDescription d;
  json pairs = json::array(), duals = json::array();
  std::optional<AffinePoint> Q;
  if (c.at == "inf") {
    d = semigroup_at_infinity(P);
  } else if (c.at == "Q") {
    std::mt19937_64 rng(c.seed);
    Q = parse_point(P, c.point, rng);
    const BasisTable t = obtain_table(P, *Q, c, err);
    d = semigroup_at_Q(t);
    for (const auto& row : t.rows) {
      const auto dual = bijection(row.pole, row.vanish, t.m);
      pairs.push_back({row.pole, -static_cast<std::int64_t>(row.vanish)});
      duals.push_back({-dual.a, dual.b});
    }
  } else {
    throw UsageError("--at must be Q or inf");
  }
  const auto fmt = parse_format(c.format);
  if (fmt == TableFormat::json) {
    json doc = header(P);
    doc["at"] = c.at;
    if (Q) doc["point"] = point_indices(P, *Q);
    doc["genus"] = P.genus;
    doc["m"] = d.m;
    doc["minimal_nongaps"] = d.minimal_nongaps;
    doc["generators"] = d.generators;
    doc["gaps"] = d.gaps;
    if (Q) {
      doc["pairs"] = pairs;
      doc["dual_pairs"] = duals;
    }
    out << doc.dump(2) << '\n';
  } else if (fmt == TableFormat::csv) {
    out << "kind,value\n";
    for (auto v : d.minimal_nongaps) out << "minimal_nongap," << v << '\n';
    for (auto v : d.generators) out << "generator," << v << '\n';
    out << "gaps," << d.gaps << '\n';
  } else {
    out << "semigroup at " << (Q ? to_string(P, *Q) : "inf") << ": " << angle(d.generators) << ", " << d.gaps
        << " gaps (genus " << P.genus << "), m = " << d.m << '\n';
    out << "minimal nongaps: " << join(d.minimal_nongaps, ' ') << '\n';
  }
  return kOk;
}

int cmd_patterns(const RunConfig& c, std::ostream& out) {
  std::vector<std::uint32_t> qs;
  if (c.q) {
    qs = {*c.q};
  } else {
    qs = {2, 3, 4, 5};
    if (c.long_run) qs.insert(qs.end(), {7, 8, 9});
  }
  const auto fmt = parse_format(c.format);
  bool all = true;
  json reports = json::array();
  if (fmt == TableFormat::csv) out << "q,ok,generators,expected\n";
  for (auto q : qs) {
    const PatternReport r = verify_patterns(q);
    all = all && r.ok;
    if (fmt == TableFormat::json) {
      json missing = json::array(), missing_dual = json::array();
      for (const auto& p : r.missing_pairs) missing.push_back({p.a, p.b});
      for (const auto& p : r.missing_dual_pairs) missing_dual.push_back({p.a, p.b});
      reports.push_back({{"q", q}, {"ok", r.ok}, {"generators", r.generators},
                         {"expected_generators", r.expected_generators}, {"missing_pairs", missing},
                         {"missing_dual_pairs", missing_dual}});
    } else if (fmt == TableFormat::csv) {
      out << q << ',' << (r.ok ? "true" : "false") << ',' << join(r.generators, ' ') << ','
          << join(r.expected_generators, ' ') << '\n';
    } else {
      out << "q=" << q << (r.ok ? " ok " : " FAIL ") << angle(r.generators);
      if (!r.ok) out << " expected " << angle(r.expected_generators);
      out << '\n';
    }
  }
  if (fmt == TableFormat::json) out << json{{"schema_version", kSchemaVersion}, {"patterns", reports}}.dump(2) << '\n';
  return all ? kOk : kVerificationFailed;
}

int cmd_divisor_check(const RunConfig& c, std::ostream& out) {
  const CurveParams P = curve_of(c);
  const SurfaceData sd = build_surface(P.q, P.nu);
  std::mt19937_64 rng(c.seed);
  std::vector<AffinePoint> pts;
  for (std::uint32_t k = 0; k < c.samples; ++k) pts.push_back(sample_rational_point(P, rng, true));
  if (P.ext_degree >= 2)
    for (std::uint32_t k = 0; k < c.samples; ++k) pts.push_back(sample_nonrational_point(P, rng));

  const auto fmt = parse_format(c.format);
  bool all = true;
  json rows = json::array();
  if (fmt == TableFormat::csv) out << "point,rational,order_at_point,order_at_conjugate,ok\n";
  for (const auto& pt : pts) {
    const auto r = verify_fundamental_equivalence(P, pt, sd);
    all = all && r.ok;
    const std::string conj = r.rational ? "" : to_string(r.order_at_conjugate);
    if (fmt == TableFormat::json) {
      json row{{"point", point_indices(P, pt)}, {"rational", r.rational},
               {"order_at_point", to_string(r.order_at_point)}, {"expected_at_point", r.expected_at_point},
               {"ok", r.ok}};
      if (!r.rational) {
        row["order_at_conjugate"] = conj;
        row["expected_at_conjugate"] = r.expected_at_conjugate;
      }
      rows.push_back(row);
    } else if (fmt == TableFormat::csv) {
      out << '"' << to_string(P, pt) << "\"," << (r.rational ? "true" : "false") << ','
          << to_string(r.order_at_point) << ',' << conj << ',' << (r.ok ? "true" : "false") << '\n';
    } else {
      out << to_string(P, pt) << (r.rational ? " rational" : " non-rational") << " order "
          << to_string(r.order_at_point);
      if (!r.rational) out << " / " << conj << " at Frobenius image";
      out << (r.ok ? " ok" : " FAIL") << '\n';
    }
  }
  if (fmt == TableFormat::json) {
    json doc = header(P);
    doc["ext_degree"] = P.ext_degree;
    doc["points"] = rows;
    doc["ok"] = all;
    out << doc.dump(2) << '\n';
  }
  return all ? kOk : kVerificationFailed;
}

struct RRContext {
  CurveParams P;
  AffinePoint Q;
  RRBasis rr;
};

RRContext rr_context(const RunConfig& c, std::ostream& err) {
  if (!c.a || !c.b) throw UsageError("--a and --b are required");
  CurveParams P = curve_of(c);
  std::mt19937_64 rng(c.seed);
  const AffinePoint Q = parse_point(P, c.point, rng);
  auto table = std::make_shared<const BasisTable>(obtain_table(P, Q, c, err));
  auto h = std::make_shared<const HFunction>(h_function(P, Q, build_surface(P.q, P.nu)));
  RRBasis rr = basis_of_L(*c.a, *c.b, table, h);
  return {std::move(P), Q, std::move(rr)};
}

int cmd_rrspace(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const RRContext ctx = rr_context(c, err);
  const auto& rr = ctx.rr;
  const auto g = static_cast<std::int64_t>(ctx.P.genus);
  const bool rr_ok = riemann_roch_check(rr.a, rr.b, *rr.table, *rr.h);
  const auto fmt = parse_format(c.format);
  if (fmt == TableFormat::json) {
    json doc = header(ctx.P);
    doc["point"] = point_indices(ctx.P, ctx.Q);
    doc["a"] = rr.a;
    doc["b"] = rr.b;
    doc["genus"] = g;
    doc["h_order"] = rr.h->m;
    doc["dim"] = rr.dim();
    doc["riemann_roch"] = rr_ok;
    json fns = json::array();
    for (const auto& f : rr.functions) {
      const auto& row = rr.table->rows[f.row];
      fns.push_back({{"i", row.i}, {"j", row.j}, {"k", f.k}, {"pole", f.pole}, {"order", f.order}});
    }
    doc["functions"] = fns;
    out << doc.dump(2) << '\n';
  } else if (fmt == TableFormat::csv) {
    out << "i,j,k,pole,order\n";
    for (const auto& f : rr.functions) {
      const auto& row = rr.table->rows[f.row];
      out << row.i << ',' << row.j << ',' << f.k << ',' << f.pole << ',' << f.order << '\n';
    }
  } else {
    out << "L(" << rr.a << " inf + " << rr.b << " Q), Q = " << to_string(ctx.P, ctx.Q) << ": dim " << rr.dim()
        << " (genus " << g << ", h of order " << rr.h->m << ")"
        << (rr_ok ? "" : " RIEMANN-ROCH MISMATCH") << '\n';
    for (const auto& f : rr.functions) {
      const auto& row = rr.table->rows[f.row];
      out << "  f[" << row.i << "," << row.j << "] h^" << f.k << "  pole " << f.pole << "  order " << f.order << '\n';
    }
  }
  return rr_ok ? kOk : kVerificationFailed;
}

int cmd_gencode(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const RRContext ctx = rr_context(c, err);
  const auto& rr = ctx.rr;
  const auto& F = *ctx.P.field;
  const auto points = evaluation_points(ctx.P, ctx.Q);
  const Matrix G = generator_matrix(rr, points);
  const std::size_t rk = rank(G, F);
  const std::int64_t n = static_cast<std::int64_t>(points.size());
  const std::int64_t designed = n - (rr.a + rr.b);
  const auto& spec = F.spec();
  const std::vector<std::uint64_t> modulus(spec.modulus.begin(), spec.modulus.end());
  const auto fmt = parse_format(c.format);
  if (fmt == TableFormat::json) {
    json doc = header(ctx.P);
    doc["field"] = to_json(spec);
    doc["point"] = point_indices(ctx.P, ctx.Q);
    doc["a"] = rr.a;
    doc["b"] = rr.b;
    doc["n"] = n;
    doc["k"] = rr.dim();
    doc["rank"] = rk;
    doc["designed_distance"] = designed;
    json pts = json::array();
    for (const auto& p : points) pts.push_back(point_indices(ctx.P, p));
    doc["points"] = pts;
    json mat = json::array();
    for (const auto& row : G) {
      json r = json::array();
      for (Fq v : row) r.push_back(F.to_index(v));
      mat.push_back(r);
    }
    doc["matrix"] = mat;
    out << doc.dump() << '\n';
  } else {
    const char sep = fmt == TableFormat::csv ? ',' : ' ';
    out << "# GF(" << spec.p << "^" << spec.m << ") modulus " << join(modulus, ' ') << "; n=" << n
        << " k=" << rr.dim() << " rank=" << rk << " designed_distance=" << designed << '\n';
    for (const auto& row : G) {
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? std::string(1, sep) : "") << F.to_index(row[k]);
      out << '\n';
    }
  }
  return rk == rr.dim() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations on generalized GK-curves", "gkcurves"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  std::uint32_t q = 0;
  app.add_option("--q", q, "Prime power q");
  app.add_option("--nu", c.nu, "Odd exponent nu")->capture_default_str();
  app.add_option("--model", c.model, "plane or gk")->check(CLI::IsMember({"plane", "gk"}))->capture_default_str();
  app.add_option("--point", c.point, "Second point: origin, sample, or comma-separated field indices")
      ->capture_default_str();
  app.add_option("--ext-degree", c.ext_degree, "Ambient field GF(q^(2 nu d))")->capture_default_str();
  app.add_option("--precision", c.precision, "Series precision for expand (0 = q^nu + 2)");
  app.add_option("--format", c.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for point sampling")->capture_default_str();
  app.add_option("--cache-dir", c.cache_dir, "Directory for cached basis tables")->envname("GK_CACHE_DIR");
  app.add_flag("--long", c.long_run, "patterns: also run q = 7, 8, 9");
  std::int64_t a = 0, b = 0;
  app.add_option("--a", a, "Multiple of infinity in the divisor");
  app.add_option("--b", b, "Multiple of Q in the divisor");
  app.add_option("--samples", c.samples, "divisor-check: points per kind")->capture_default_str();
  app.add_option("--function", c.function, "expand: coords or h")->capture_default_str();
  app.add_option("--at", c.at, "semigroup: Q or inf")->capture_default_str();

  auto* field_info = app.add_subcommand("field-info", "Field used for a curve (or GF(q) with --nu 0)");
  auto* surface = app.add_subcommand("surface", "Polynomials f, g, w and Z");
  auto* verify_identity = app.add_subcommand("verify-identity", "Check the functional equation");
  auto* count = app.add_subcommand("count", "Count rational points");
  auto* verify_max = app.add_subcommand("verify-max", "Count points and compare with the Hasse-Weil bound");
  auto* expand = app.add_subcommand("expand", "Local series at a point");
  auto* basis = app.add_subcommand("basis", "Two-point basis rows");
  auto* tables = app.add_subcommand("tables", "Pole and vanishing order grids");
  auto* semigroup = app.add_subcommand("semigroup", "Weierstrass semigroup at Q or at infinity");
  auto* patterns = app.add_subcommand("patterns", "Check the nu = 3 semigroup patterns");
  auto* divisor_check = app.add_subcommand("divisor-check", "Orders of h at sampled points");
  auto* rrspace = app.add_subcommand("rrspace", "Basis of L(a inf + b Q)");
  auto* gencode = app.add_subcommand("gencode", "Generator matrix of the two-point code");

  std::vector<std::string> argv_store{"gkcurves"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (app.count("--q")) c.q = q;
  if (app.count("--a")) c.a = a;
  if (app.count("--b")) c.b = b;

  try {
    if (field_info->parsed()) return cmd_field_info(c, out);
    if (surface->parsed()) return cmd_surface(c, out);
    if (verify_identity->parsed()) return cmd_verify_identity(c, out);
    if (count->parsed()) return cmd_count(c, out, false);
    if (verify_max->parsed()) return cmd_count(c, out, true);
    if (expand->parsed()) return cmd_expand(c, out);
    if (basis->parsed()) return cmd_basis(c, out, err, false);
    if (tables->parsed()) return cmd_basis(c, out, err, true);
    if (semigroup->parsed()) return cmd_semigroup(c, out, err);
    if (patterns->parsed()) return cmd_patterns(c, out);
    if (divisor_check->parsed()) return cmd_divisor_check(c, out);
    if (rrspace->parsed()) return cmd_rrspace(c, out, err);
    if (gencode->parsed()) return cmd_gencode(c, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  err << "error: no command\n";
  return kUsageError;
}

}  // namespace gk::cli
