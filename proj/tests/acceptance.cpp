// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria. Pass --long to add the q = 7, 8, 9 pattern runs.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gk/basis.hpp"
#include "gk/curve.hpp"
#include "gk/rr.hpp"
#include "gk/semigroup.hpp"
#include "gk/surface.hpp"

using namespace gk;

namespace {

using U = std::vector<std::uint64_t>;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Check {
  std::string detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

// Genus straight from the defining equations.
std::uint64_t genus_formula(std::uint32_t q, std::uint32_t nu, Model model) {
  if (model == Model::plane) return (std::uint64_t{q} * q - 1) * ((ipow(q, nu) + 1) / (q + 1) - 1) / 2;
  return (q - 1) * (ipow(q, nu + 1) + ipow(q, nu) - std::uint64_t{q} * q) / 2;
}

// Counts affine solutions by value histograms of y^(q^2) - y, z^r and x^q + x.
std::uint64_t brute_count(std::uint32_t q, std::uint32_t nu, Model model) {
  const auto pe = *as_prime_power(q);
  const FieldPtr F = make_field(pe.first, 2 * nu * pe.second);
  const std::uint64_t n = F->size();
  const auto r = static_cast<std::int64_t>((ipow(q, nu) + 1) / (q + 1));
  std::vector<std::uint64_t> zcount(n, 0), xcount(n, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Fq v = F->from_index(i);
    ++zcount[F->to_index(F->pow(v, r))];
    ++xcount[F->to_index(F->add(F->pow(v, q), v))];
  }
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Fq y = F->from_index(i);
    const std::uint64_t zs = zcount[F->to_index(F->sub(F->pow(y, std::int64_t{q} * q), y))];
    total += model == Model::plane ? zs : zs * xcount[F->to_index(F->pow(y, q + 1))];
  }
  return total;
}

// Gaps of the semigroup generated by `gens` by direct membership sieving.
std::uint64_t sieve_gaps(const U& gens) {
  const std::uint64_t s = *std::min_element(gens.begin(), gens.end());
  const std::uint64_t bound = s * *std::max_element(gens.begin(), gens.end()) + s;
  std::vector<char> in(bound + 1, 0);
  in[0] = 1;
  std::uint64_t gaps = 0;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    for (auto g : gens)
      if (g <= k && in[k - g]) in[k] = 1;
    gaps += !in[k];
  }
  return gaps;
}

BasisTable sampled_table(std::uint32_t q, std::uint32_t nu, Model model, std::uint64_t seed,
                         Seeding seeding = Seeding::incremental) {
  const CurveParams P = make_curve(q, nu, model);
  std::mt19937_64 rng(seed);
  return build_basis(P, make_chart(P, sample_rational_point(P, rng, true)), seeding);
}

Check golden_tables() {
  Check c;
  const std::map<std::uint32_t, std::size_t> entries{{2, 9}, {3, 28}, {4, 65}};
  for (auto [q, count] : entries) {
    const BasisTable t = sampled_table(q, 3, Model::plane, 0);
    c.expect(t.rows.size() == count, "q=" + std::to_string(q) + " entry count");
    const std::string golden = slurp(std::string(GK_GOLDEN_DIR) + "/tables_q" + std::to_string(q) + ".csv");
    c.expect(!golden.empty(), "missing golden file for q=" + std::to_string(q));
    c.expect(export_grids(t, TableFormat::csv) == golden, "q=" + std::to_string(q) + " grids differ");
  }
  return c;
}

Check semigroups_at_Q() {
  Check c;
  const std::map<std::uint32_t, U> expected{
      {2, {7, 8, 9, 13}}, {3, {25, 27, 28, 74, 121}}, {4, {61, 64, 65, 243, 422, 601}}};
  for (const auto& [q, gens] : expected) {
    const auto d = semigroup_at_Q(sampled_table(q, 3, Model::gk, 0));
    c.expect(d.generators == gens, "q=" + std::to_string(q) + " generators");
  }
  return c;
}

Check maximality() {
  Check c;
  for (auto [q, nu] : {std::pair{2u, 3u}, {3u, 3u}, {4u, 3u}, {2u, 5u}}) {
    for (Model model : {Model::plane, Model::gk}) {
      const std::string tag = std::to_string(q) + "," + std::to_string(nu) + "," + to_string(model);
      const CurveParams P = make_curve(q, nu, model);
      const std::uint64_t g = genus_formula(q, nu, model);
      const std::uint64_t bound = ipow(q, 2 * nu) + 1 + 2 * g * ipow(q, nu);
      const std::uint64_t enumerated = count_points(P);
      c.expect(P.genus == g, tag + " genus");
      c.expect(enumerated == bound, tag + " enumeration vs bound");
      c.expect(brute_count(q, nu, model) == enumerated, tag + " histogram count");
    }
  }
  c.expect(count_points(make_curve(2, 3, Model::gk)) == 225, "N(2,3,gk)");
  c.expect(count_points(make_curve(2, 3, Model::plane)) == 113, "N(2,3,plane)");
  return c;
}

Check functional_equation() {
  Check c;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u})
    for (std::uint32_t nu : {1u, 3u, 5u, 7u})
      c.expect(verify_functional_equation(build_surface(q, nu)),
               "q=" + std::to_string(q) + " nu=" + std::to_string(nu));
  return c;
}

Check surface_examples() {
  Check c;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const SurfaceData sd = build_surface(q, 3);
    c.expect(sd.exponents(sd.w) == U{1, q}, "w for q=" + std::to_string(q));
    c.expect(sd.exponents(sd.Z) == U{1}, "Z for q=" + std::to_string(q));
  }
  const SurfaceData sd = build_surface(2, 5);
  c.expect(sd.exponents(sd.f) == U{1, 3}, "f");
  c.expect(sd.exponents(sd.g) == U{0, 1, 5}, "g");
  c.expect(sd.exponents(sd.Z) == U{1, 3, 4}, "Z");
  return c;
}

Check divisor_orders() {
  Check c;
  for (auto [q, nu] : {std::pair{2u, 3u}, {3u, 3u}, {2u, 5u}}) {
    const SurfaceData sd = build_surface(q, nu);
    const std::uint64_t qn = ipow(q, nu);
    for (Model model : {Model::plane, Model::gk}) {
      const std::string tag = std::to_string(q) + "," + std::to_string(nu) + "," + to_string(model);
      const CurveParams P = make_curve(q, nu, model, 2);
      std::mt19937_64 rng(q * 1000 + nu);
      for (int k = 0; k < 20; ++k) {
        const auto r = verify_fundamental_equivalence(P, sample_rational_point(P, rng, true), sd);
        c.expect(r.rational && r.order_at_point == Valuation::exactly(qn + 1), tag + " rational point");
      }
      for (int k = 0; k < 3; ++k) {
        const auto r = verify_fundamental_equivalence(P, sample_nonrational_point(P, rng), sd);
        c.expect(!r.rational && r.order_at_point == Valuation::exactly(qn) &&
                     r.order_at_conjugate == Valuation::exactly(1),
                 tag + " non-rational point");
      }
    }
  }
  return c;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kTableConfigs{{2, 3}, {3, 3}, {4, 3}, {5, 3}, {2, 5}, {3, 5}};

Check pivots_and_symmetry() {
  Check c;
  for (auto [q, nu] : kTableConfigs) {
    for (Model model : {Model::plane, Model::gk}) {
      const std::string tag = std::to_string(q) + "," + std::to_string(nu) + "," + to_string(model);
      const BasisTable t = sampled_table(q, nu, model, 1);
      const std::uint64_t m = t.m, g = t.params.genus;
      U vanish;
      std::map<std::uint64_t, std::uint64_t> by_pole;
      for (const auto& row : t.rows) {
        vanish.push_back(row.vanish);
        by_pole[row.pole] = row.vanish;
      }
      std::sort(vanish.begin(), vanish.end());
      U iota(m);
      for (std::uint64_t k = 0; k < m; ++k) iota[k] = k;
      c.expect(vanish == iota, tag + " vanishing orders");
      for (const auto& [a, b] : by_pole) {
        const auto it = by_pole.find(2 * g - 1 + m - a);
        c.expect(it != by_pole.end() && b + it->second == m - 1, tag + " symmetry at pole " + std::to_string(a));
      }
      c.expect(verify_symmetry(t), tag + " verify_symmetry");
    }
  }
  return c;
}

Check naive_equivalence() {
  Check c;
  for (std::uint32_t q : {2u, 3u}) {
    for (Model model : {Model::plane, Model::gk}) {
      const BasisTable a = sampled_table(q, 3, model, 4, Seeding::incremental);
      const BasisTable b = sampled_table(q, 3, model, 4, Seeding::direct);
      c.expect(a == b, "q=" + std::to_string(q) + " " + to_string(model) + " tables");
      for (std::size_t k = 0; k < a.rows.size() && k < b.rows.size(); ++k)
        c.expect(a.rows[k].rep == b.rows[k].rep, "q=" + std::to_string(q) + " representatives");
    }
  }
  return c;
}

Check riemann_roch() {
  Check c;
  for (std::uint32_t q : {2u, 3u}) {
    const CurveParams P = make_curve(q, 3, Model::gk);
    const SurfaceData sd = build_surface(q, 3);
    const auto g = static_cast<std::int64_t>(P.genus);
    std::mt19937_64 rng(q);
    for (bool origin : {true, false}) {
      const AffinePoint Q = origin ? AffinePoint{} : sample_rational_point(P, rng, true);
      const std::string tag = "q=" + std::to_string(q) + (origin ? " origin" : " gamma!=0");
      auto table = std::make_shared<const BasisTable>(two_point_basis(P, Q));
      auto h = std::make_shared<const HFunction>(h_function(P, Q, sd));
      for (int k = 0; k < 20; ++k) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(4 * g)) - g;
        const std::int64_t b = 2 * g - 1 - a + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(g));
        c.expect(static_cast<std::int64_t>(dim_L(a, b, *table, *h)) == a + b + 1 - g, tag + " dimension");
      }
      const auto points = evaluation_points(P, Q);
      for (int k = 0; k < 5; ++k) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(3 * g));
        const std::int64_t b = 2 * g - 1 - a + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(g));
        const RRBasis rr = basis_of_L(a, b, table, h);
        c.expect(rank(generator_matrix(rr, points), *P.field) == rr.dim(), tag + " rank");
      }
    }
  }
  return c;
}

Check patterns(bool long_run) {
  Check c;
  U qs{2, 3, 4, 5};
  if (long_run) qs.insert(qs.end(), {7, 8, 9});
  for (auto q : qs) c.expect(verify_patterns(static_cast<std::uint32_t>(q)).ok, "q=" + std::to_string(q));
  return c;
}

Check gap_counts() {
  Check c;
  for (auto [q, nu] : kTableConfigs) {
    for (Model model : {Model::plane, Model::gk}) {
      const std::string tag = std::to_string(q) + "," + std::to_string(nu) + "," + to_string(model);
      const CurveParams P = make_curve(q, nu, model);
      const auto inf = semigroup_at_infinity(P);
      c.expect(inf.gaps == P.genus && sieve_gaps(inf.generators) == P.genus, tag + " at infinity");
      try {
        const auto atQ = semigroup_at_Q(sampled_table(q, nu, model, 1));
        c.expect(atQ.gaps == P.genus && sieve_gaps(atQ.generators) == P.genus, tag + " at Q");
      } catch (const std::logic_error& e) {
        c.expect(false, tag + " at Q: " + e.what());
      }
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) {
      long_run = true;
    } else {
      std::fprintf(stderr, "usage: %s [--long]\n", argv[0]);
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden pole/vanishing tables q=2,3,4", 5, golden_tables},
      {2, "semigroups at Q for q=2,3,4", 10, semigroups_at_Q},
      {3, "maximal point counts", 60, maximality},
      {4, "functional equation q<=7, nu<=7", 30, functional_equation},
      {5, "explicit surface examples", 1, surface_examples},
      {6, "divisor orders at sampled points", 60, divisor_orders},
      {7, "pivot completeness and symmetry", 120, pivots_and_symmetry},
      {8, "incremental vs direct elimination", 120, naive_equivalence},
      {9, "Riemann-Roch dimensions and ranks", 60, riemann_roch},
      {10, long_run ? "patterns q=2..5,7,8,9" : "patterns q=2..5", long_run ? 3600.0 : 300.0,
       [long_run] { return patterns(long_run); }},
      {11, "gap counts equal the genus", 120, gap_counts},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.budget) c.expect(false, "over the time budget");
    failed += !c.ok;
    std::printf("%s criterion %2d: %s (%.2f s, budget %.0f s)%s%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name, secs,
                cr.budget, c.ok ? "" : " -- ", c.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
