#include "gk/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace gk {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t m) { return (a + m - 1) / m; }

}  // namespace

std::string to_string(const NongapPair& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

NongapPair bijection(std::uint64_t a, std::uint64_t b_vanish, std::uint64_t m) {
  if (m == 0 || b_vanish >= m) throw std::invalid_argument("vanishing order must lie in [0, m)");
  const std::uint64_t i = ceil_div(a, m);
  return {static_cast<std::int64_t>(i * m - a), static_cast<std::int64_t>(i * m - b_vanish)};
}

std::vector<std::uint64_t> minimal_generators(std::vector<std::uint64_t> elements) {
  std::erase(elements, 0);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) return {};
  const std::uint64_t bound = elements.back();
  std::vector<char> reach(bound + 1, 0);
  reach[0] = 1;
  std::vector<std::uint64_t> gens;
  for (auto x : elements) {
    if (reach[x]) continue;
    gens.push_back(x);
    for (std::uint64_t n = x; n <= bound; ++n)
      if (reach[n - x]) reach[n] = 1;
  }
  return gens;
}

std::uint64_t count_gaps(const std::vector<std::uint64_t>& generators) {
  if (generators.empty()) throw std::invalid_argument("empty generating set");
  std::uint64_t g = 0;
  for (auto x : generators) g = std::gcd(g, x);
  if (g != 1) throw std::invalid_argument("generators have a common factor");
  const std::uint64_t s = *std::min_element(generators.begin(), generators.end());
  if (s == 1) return 0;

  // Smallest semigroup element in each class mod s (shortest paths).
  constexpr auto inf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(s, inf);
  using Item = std::pair<std::uint64_t, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[r]) continue;
    for (auto x : generators) {
      const std::uint64_t nr = (r + x) % s;
      if (d + x < dist[nr]) {
        dist[nr] = d + x;
        pq.push({d + x, nr});
      }
    }
  }
  std::uint64_t gaps = 0;
  for (auto w : dist) gaps += w / s;
  return gaps;
}

SemigroupDescription describe_semigroup(std::uint64_t m, std::vector<std::uint64_t> minimal_nongaps) {
  std::sort(minimal_nongaps.begin(), minimal_nongaps.end());
  if (minimal_nongaps.size() != m) throw std::logic_error("expected one minimal nongap per class");
  std::vector<char> seen(m, 0);
  for (auto a : minimal_nongaps) {
    if (seen[a % m]++) throw std::logic_error("two minimal nongaps in one residue class");
  }
  SemigroupDescription d;
  d.m = m;
  d.minimal_nongaps = minimal_nongaps;
  minimal_nongaps.push_back(m);
  d.generators = minimal_generators(std::move(minimal_nongaps));
  d.gaps = count_gaps(d.generators);
  return d;
}

SemigroupDescription semigroup_at_Q(const BasisTable& table) {
  std::vector<std::uint64_t> nongaps;
  for (const auto& row : table.rows) {
    nongaps.push_back(static_cast<std::uint64_t>(bijection(row.pole, row.vanish, table.m).b));
  }
  auto d = describe_semigroup(table.m, std::move(nongaps));
  if (d.gaps != table.params.genus) {
    throw std::logic_error("gap count " + std::to_string(d.gaps) + " at Q differs from the genus " +
                           std::to_string(table.params.genus));
  }
  return d;
}

SemigroupDescription semigroup_at_infinity(const CurveParams& params) {
  std::vector<std::uint64_t> nongaps;
  for (const auto& mon : monomial_order(params)) nongaps.push_back(mon.pole);
  auto d = describe_semigroup(params.m, std::move(nongaps));
  if (d.gaps != params.genus) {
    throw std::logic_error("gap count " + std::to_string(d.gaps) + " at infinity differs from the genus " +
                           std::to_string(params.genus));
  }
  return d;
}

PatternReport check_patterns(const BasisTable& table) {
  const auto& P = table.params;
  if (P.nu != 3 || P.model != Model::gk) throw std::invalid_argument("patterns are stated for the gk model with nu = 3");
  const std::int64_t q = P.q, q2 = q * q, q3 = q2 * q, q4 = q3 * q;
  const std::int64_t m = static_cast<std::int64_t>(table.m);

  PatternReport rep;
  rep.q = P.q;
  rep.expected_pairs = {{q3 - q2 + q, -1}, {q3, -q}, {q3 + 1, -q3 - 1}};
  rep.expected_dual_pairs = {{-q2 + q - 1, q3}, {-1, q3 + 1 - q}, {-q3 - 1, q3 + 1}};
  rep.expected_generators = {static_cast<std::uint64_t>(q3 - q + 1), static_cast<std::uint64_t>(q3),
                             static_cast<std::uint64_t>(q3 + 1)};
  for (std::int64_t i = 0; i <= q - 2; ++i) {
    rep.expected_pairs.push_back({q4 + i * (q4 - q3), -q2 - 1 - i * q2});
    rep.expected_dual_pairs.push_back({-q - i * (q - 1), q4 + q + i * (q4 + q - q3 - 1) - q2 - 1 - i * q2});
    rep.expected_generators.push_back(static_cast<std::uint64_t>(q4 - q2 + q - 1 + i * (q4 - q3 - q2 + q - 1)));
  }
  std::sort(rep.expected_generators.begin(), rep.expected_generators.end());

  // Pairs reachable as row * h^k, k >= 0, and their duals.
  std::set<std::pair<std::int64_t, std::int64_t>> direct, dual;
  for (const auto& row : table.rows) {
    direct.insert({static_cast<std::int64_t>(row.pole), static_cast<std::int64_t>(row.vanish)});
    const auto d = bijection(row.pole, row.vanish, table.m);
    dual.insert({d.a, d.b});
  }
  auto realized = [m](const std::set<std::pair<std::int64_t, std::int64_t>>& base, std::int64_t a, std::int64_t b) {
    for (const auto& [x, y] : base) {
      if (x <= a && (a - x) % m == 0 && y + (a - x) == b) return true;
    }
    return false;
  };
  for (const auto& p : rep.expected_pairs)
    if (!realized(direct, p.a, -p.b)) rep.missing_pairs.push_back(p);
  for (const auto& p : rep.expected_dual_pairs)
    if (!realized(dual, -p.a, p.b)) rep.missing_dual_pairs.push_back(p);

  rep.generators = semigroup_at_Q(table).generators;
  rep.ok = rep.missing_pairs.empty() && rep.missing_dual_pairs.empty() && rep.generators == rep.expected_generators;
  return rep;
}

PatternReport verify_patterns(std::uint32_t q) {
  const CurveParams P = make_curve(q, 3, Model::gk);
  std::mt19937_64 rng(0);
  const AffinePoint Q = sample_rational_point(P, rng, true);
  return check_patterns(build_basis(P, make_chart(P, Q)));
}

}  // namespace gk
