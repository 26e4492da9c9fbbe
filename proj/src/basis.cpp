#include "gk/basis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "gk/surface.hpp"

namespace gk {

namespace {

using Dense = std::vector<Fq>;

// Normal forms of y^a z^b modulo the curve and h, as coordinates over the
// kept monomials. Two rules: y^(yb+1) -> y_rule and z^r -> y^(q^2) - y.
class Reducer {
 public:
  Reducer(const CurveParams& P, const detail::EliminationSetup& s)
      : F_(*P.field), yb_(s.y_bound), r_(P.r), q2_(P.q * P.q), m_(s.m) {
    index_.assign(yb_ + 1, std::vector<std::int64_t>(r_, -1));
    for (std::size_t k = 0; k < s.monomials.size(); ++k) {
      const auto& mon = s.monomials[k];
      if (mon.i > yb_ || mon.j >= r_) throw std::logic_error("monomial outside the kept range");
      index_[mon.i][mon.j] = static_cast<std::int64_t>(k);
    }
    for (const auto& [e, c] : s.y_rule.terms()) {
      if (e[0] > yb_ || e[1] >= r_) throw std::logic_error("y-rule is not reduced");
      rule_.push_back({e[0], e[1], c});
    }
  }

  /// out += c * NF(y^a z^b)
  void add(Dense& out, std::uint64_t a, std::uint64_t b, Fq c) {
    if (Field::is_zero(c)) return;
    if (a <= yb_ && b < r_) {
      const auto k = index_[a][b];
      if (k < 0) throw std::logic_error("monomial missing from the order");
      out[k] = F_.add(out[k], c);
      return;
    }
    const Dense& v = nf(a, b);
    for (std::size_t k = 0; k < m_; ++k)
      if (!Field::is_zero(v[k])) out[k] = F_.add(out[k], F_.mul(c, v[k]));
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Term {
    std::uint64_t i, j;
    Fq c;
  };

  const Dense& nf(std::uint64_t a, std::uint64_t b) {
    auto it = memo_.find({a, b});
    if (it != memo_.end()) return it->second;
    Dense v(m_, Field::zero());
    if (a > yb_) {
      for (const auto& t : rule_) add(v, a - yb_ - 1 + t.i, b + t.j, t.c);
    } else {
      add(v, a + q2_, b - r_, Field::one());
      add(v, a + 1, b - r_, F_.neg(Field::one()));
    }
    return memo_.emplace(std::make_pair(a, b), std::move(v)).first->second;
  }

  const Field& F_;
  std::uint64_t yb_, r_, q2_;
  std::size_t m_;
  std::vector<std::vector<std::int64_t>> index_;
  std::vector<Term> rule_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Dense> memo_;
};

Dense dense_of(const TruncatedSeries& s, std::size_t m) {
  Dense out(m, Field::zero());
  for (std::size_t k = 0; k < m && k < s.precision(); ++k) out[k] = s[k];
  return out;
}

void require_compatible(const CurveParams& P, const LocalChart& chart) {
  const auto& C = chart.params;
  if (C.q != P.q || C.nu != P.nu || C.model != P.model || !(C.field->spec() == P.field->spec())) {
    throw std::invalid_argument("chart belongs to a different curve");
  }
}

}  // namespace

std::vector<MonomialEntry> monomial_order(const CurveParams& P) {
  const std::uint64_t scale = P.model == Model::gk ? P.q : 1;
  std::vector<MonomialEntry> out;
  for (std::uint32_t j = 0; j < P.r; ++j)
    for (std::uint32_t i = 0; i <= P.q; ++i)
      out.push_back({i, j, scale * (i * P.r + std::uint64_t{j} * P.q * P.q)});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.pole < b.pole; });
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (out[k].pole == out[k - 1].pole) throw std::logic_error("tie in the monomial pole order");
  }
  return out;
}

const BasisRow& BasisTable::at(std::uint32_t i, std::uint32_t j) const {
  for (const auto& row : rows)
    if (row.i == i && row.j == j) return row;
  throw std::out_of_range("no basis row for y^" + std::to_string(i) + " z^" + std::to_string(j));
}

std::uint32_t BasisTable::y_count() const {
  std::uint32_t n = 0;
  for (const auto& row : rows) n = std::max(n, row.i + 1);
  return n;
}

std::uint32_t BasisTable::z_count() const {
  std::uint32_t n = 0;
  for (const auto& row : rows) n = std::max(n, row.j + 1);
  return n;
}

bool operator==(const BasisRow& a, const BasisRow& b) {
  return a.i == b.i && a.j == b.j && a.pole == b.pole && a.vanish == b.vanish && a.rep == b.rep &&
         a.series.field().spec() == b.series.field().spec() &&
         std::ranges::equal(a.series.coeffs(), b.series.coeffs());
}

bool operator==(const BasisTable& a, const BasisTable& b) {
  const auto& P = a.params;
  const auto& Q = b.params;
  return P.q == Q.q && P.nu == Q.nu && P.model == Q.model && P.field->spec() == Q.field->spec() &&
         a.point == b.point && a.m == b.m && a.rows == b.rows;
}

namespace detail {

SparsePoly plane_y_rule(const CurveParams& P, const AffinePoint& conj) {
  const SurfaceData sd = build_surface(P.q, P.nu);
  const SparsePoly h = h_plane(sd, FieldElement(P.field, conj.y), FieldElement(P.field, conj.z));
  return SparsePoly::monomial(P.field, 2, {P.q + 1, 0, 0}, Field::one()) - h;
}

BasisTable eliminate(const CurveParams& P, const LocalChart& chart, const EliminationSetup& setup,
                     Seeding seeding) {
  const Field& F = *P.field;
  const std::size_t m = setup.m;
  if (setup.monomials.size() != m) throw std::logic_error("monomial count differs from m");
  if (chart.precision < m) throw std::invalid_argument("chart precision is below the row length");

  Reducer reducer(P, setup);
  const TruncatedSeries ys = chart.y.truncated(m);
  const TruncatedSeries zs = chart.z.truncated(m);

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> where;
  std::vector<Dense> reps, series;
  std::vector<std::size_t> pivots;
  std::vector<bool> taken(m, false);
  std::uint64_t reductions = 0;

  // Powers for direct seeding.
  std::vector<TruncatedSeries> ypow, zpow;
  if (seeding == Seeding::direct) {
    ypow.push_back(TruncatedSeries::constant(P.field, Field::one(), m));
    zpow.push_back(TruncatedSeries::constant(P.field, Field::one(), m));
  }

  for (std::size_t k = 0; k < m; ++k) {
    const auto& mon = setup.monomials[k];
    Dense rep(m, Field::zero());
    Dense row;
    if (k == 0 || seeding == Seeding::direct) {
      rep[k] = Field::one();
      if (seeding == Seeding::direct) {
        while (ypow.size() <= mon.i) ypow.push_back((ypow.back() * ys).truncated(m));
        while (zpow.size() <= mon.j) zpow.push_back((zpow.back() * zs).truncated(m));
        row = dense_of(ypow[mon.i] * zpow[mon.j], m);
      } else {
        row = dense_of(TruncatedSeries::constant(P.field, Field::one(), m), m);
      }
    } else {
      const bool by_y = mon.i > 0;
      const auto prev = where.at(by_y ? std::make_pair(mon.i - 1, mon.j) : std::make_pair(mon.i, mon.j - 1));
      for (std::size_t l = 0; l <= prev; ++l) {
        const Fq c = reps[prev][l];
        if (Field::is_zero(c)) continue;
        const auto& src = setup.monomials[l];
        reducer.add(rep, src.i + (by_y ? 1 : 0), src.j + (by_y ? 0 : 1), c);
      }
      row = dense_of(TruncatedSeries(P.field, series[prev]) * (by_y ? ys : zs), m);
    }

    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t piv = pivots[l];
      if (Field::is_zero(row[piv])) continue;
      const Fq factor = F.div(row[piv], series[l][piv]);
      for (std::size_t c = piv; c < m; ++c)
        if (!Field::is_zero(series[l][c])) row[c] = F.sub(row[c], F.mul(factor, series[l][c]));
      for (std::size_t c = 0; c <= l; ++c)
        if (!Field::is_zero(reps[l][c])) rep[c] = F.sub(rep[c], F.mul(factor, reps[l][c]));
      ++reductions;
    }

    const auto nz = std::find_if(row.begin(), row.end(), [](Fq a) { return !Field::is_zero(a); });
    if (nz == row.end()) {
      throw std::runtime_error("row y^" + std::to_string(mon.i) + " z^" + std::to_string(mon.j) +
                               " vanishes modulo t^" + std::to_string(m));
    }
    const std::size_t piv = static_cast<std::size_t>(nz - row.begin());
    if (taken[piv]) throw std::runtime_error("pivot collision at column " + std::to_string(piv));
    taken[piv] = true;
    pivots.push_back(piv);
    where[{mon.i, mon.j}] = k;
    reps.push_back(std::move(rep));
    series.push_back(std::move(row));
  }

  BasisTable table{P, chart.point, m, {}, reductions};
  table.rows.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    SparsePoly poly(P.field, 2);
    for (std::size_t l = 0; l <= k; ++l) {
      if (!Field::is_zero(reps[k][l])) poly.add_term({setup.monomials[l].i, setup.monomials[l].j, 0}, reps[k][l]);
    }
    const auto& mon = setup.monomials[k];
    table.rows.push_back(BasisRow{mon.i, mon.j, mon.pole, pivots[k], std::move(poly),
                                  TruncatedSeries(P.field, std::move(series[k]))});
  }
  return table;
}

}  // namespace detail

BasisTable build_basis(const CurveParams& P, const LocalChart& chart, Seeding seeding) {
  require_compatible(P, chart);
  if (chart.kind != ChartKind::gamma_nonzero) {
    throw std::invalid_argument("build_basis needs a second point with z != 0");
  }
  if (!is_rational(P, chart.point)) throw std::invalid_argument("the second point must be rational");
  detail::EliminationSetup setup{monomial_order(P), P.q, detail::plane_y_rule(P, conjugate_q_nu(P, chart.point)),
                                 P.m};
  return detail::eliminate(P, chart, setup, seeding);
}

bool verify_symmetry(const BasisTable& table) {
  const std::uint64_t top = 2 * table.params.genus - 1 + table.m;
  std::map<std::uint64_t, std::uint64_t> vanish_of;
  std::uint64_t max_pole = 0;
  for (const auto& row : table.rows) {
    vanish_of[row.pole] = row.vanish;
    max_pole = std::max(max_pole, row.pole);
  }
  if (max_pole != top) return false;
  for (const auto& [a, b] : vanish_of) {
    auto it = vanish_of.find(top - a);
    if (it == vanish_of.end() || b + it->second != table.m - 1) return false;
  }
  return true;
}

TableFormat parse_format(const std::string& s) {
  if (s == "text") return TableFormat::text;
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, csv or json)");
}

}  // namespace gk
