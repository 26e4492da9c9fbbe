#include "gk/gf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace gk {

namespace {

using Digits = std::vector<std::uint64_t>;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (e > 0) {
    if (e & 1) result = static_cast<std::uint64_t>((__uint128_t)result * base % mod);
    base = static_cast<std::uint64_t>((__uint128_t)base * base % mod);
    e >>= 1;
  }
  return result;
}

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomials over GF(p), constant term first, used only while building a field.
Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Digits prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  const std::size_t m = f.size() - 1;  // f monic
  for (std::size_t d = prod.size(); d-- > m;) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) {
      prod[d - m + i] = (prod[d - m + i] + (p - c) * f[i]) % p;
    }
  }
  trim(prod);
  return prod;
}

Digits poly_powmod(Digits base, std::uint64_t e, const Digits& f, std::uint64_t p) {
  Digits result{1};
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Digits poly_mod(Digits a, const Digits& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = pow_mod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

Digits poly_gcd(Digits a, Digits b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Digits r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_size(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw FieldError("extension degree must be at least 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    size *= p;
    if (size > kMaxFieldSize) {
      throw FieldError("field size " + std::to_string(p) + "^" + std::to_string(m) +
                       " exceeds the supported bound " + std::to_string(kMaxFieldSize));
    }
  }
  return size;
}

Digits to_digits(std::uint64_t index, std::uint32_t p, std::uint32_t m) {
  Digits d(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

std::uint64_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return idx;
}

}  // namespace

std::uint64_t FieldSpec::size() const {
  std::uint64_t s = 1;
  for (std::uint32_t i = 0; i < m; ++i) s *= p;
  return s;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), e};
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Digits f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  // Ben-Or: no factor of degree i <= m/2 divides x^(p^i) - x.
  Digits h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Digits diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    Digits g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> select_modulus(std::uint32_t p, std::uint32_t m) {
  const std::uint64_t count = checked_size(p, m);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Digits d = to_digits(idx, p, m);
    std::vector<std::uint32_t> cand(d.begin(), d.end());
    cand.push_back(1);
    if (is_irreducible(cand, p)) return cand;
  }
  throw FieldError("no irreducible polynomial found");  // unreachable for prime p
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  size_ = checked_size(spec_.p, spec_.m);
  const std::uint32_t p = spec_.p, m = spec_.m;
  if (spec_.modulus.size() != m + 1 || spec_.modulus.back() != 1) {
    throw FieldError("modulus must be monic of degree m");
  }
  for (auto c : spec_.modulus) {
    if (c >= p) throw FieldError("modulus coefficient out of range");
  }
  if (!is_irreducible(spec_.modulus, p)) throw FieldError("modulus is not irreducible");
  order_ = static_cast<std::uint32_t>(size_ - 1);

  const Digits f(spec_.modulus.begin(), spec_.modulus.end());
  const auto factors = prime_factors(order_);
  Digits g;
  for (std::uint64_t idx = 1; idx < size_; ++idx) {
    Digits cand = to_digits(idx, p, m);
    trim(cand);
    bool primitive = true;
    for (auto l : factors) {
      if (poly_powmod(cand, order_ / l, f, p) == Digits{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }

  // Multiply by g with fixed-size scratch; g is usually t or another sparse element.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> g_terms, f_terms;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i]) g_terms.emplace_back(static_cast<std::uint32_t>(i), g[i]);
  for (std::uint32_t i = 0; i < m; ++i)
    if (f[i]) f_terms.emplace_back(i, f[i]);

  exp_.assign(order_, 0);
  log_.assign(size_, 0);
  Digits cur(m, 0), scratch(2 * m, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < order_; ++k) {
    const std::uint64_t idx = from_digits(cur, p);
    if (log_[idx] != 0) throw FieldError("generator search produced a non-primitive element");
    exp_[k] = static_cast<std::uint32_t>(idx);
    log_[idx] = k + 1;
    std::fill(scratch.begin(), scratch.end(), 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      if (!cur[i]) continue;
      for (auto [s, gs] : g_terms) scratch[i + s] = (scratch[i + s] + cur[i] * gs) % p;
    }
    for (std::uint32_t d = 2 * m; d-- > m;) {
      std::uint64_t c = scratch[d];
      if (!c) continue;
      scratch[d] = 0;
      for (auto [i, fi] : f_terms) scratch[d - m + i] = (scratch[d - m + i] + (p - c) * fi) % p;
    }
    std::copy(scratch.begin(), scratch.begin() + m, cur.begin());
  }

  zech_.assign(order_, 0);
  for (std::uint32_t k = 0; k < order_; ++k) {
    std::uint64_t idx = exp_[k];
    std::uint64_t c0 = idx % p;
    std::uint64_t shifted = idx - c0 + (c0 + 1) % p;
    zech_[k] = log_[shifted];
  }
  minus_one_ = Fq{log_[p - 1]};
  if (p == 2) minus_one_ = one();
}

Fq Field::inv(Fq a) const {
  if (a.code == 0) throw FieldError("division by zero");
  std::uint32_t la = a.code - 1;
  return Fq{(la == 0 ? 0 : order_ - la) + 1};
}

Fq Field::pow(Fq a, std::int64_t e) const {
  if (a.code == 0) {
    if (e > 0) return zero();
    if (e == 0) return one();
    throw FieldError("zero raised to a negative power");
  }
  std::int64_t em = e % static_cast<std::int64_t>(order_);
  if (em < 0) em += order_;
  return Fq{static_cast<std::uint32_t>(std::uint64_t{a.code - 1} * static_cast<std::uint64_t>(em) %
                                       order_) +
            1};
}

std::uint64_t Field::frobenius_factor(std::uint64_t e) const {
  return pow_mod(spec_.p, e, order_);
}

Fq Field::frobenius(Fq a, std::uint64_t e) const {
  return frobenius_with(a, frobenius_factor(e));
}

bool Field::in_subfield(Fq a, std::uint32_t k) const {
  if (k == 0 || spec_.m % k != 0) {
    throw FieldError("subfield degree " + std::to_string(k) + " does not divide " +
                     std::to_string(spec_.m));
  }
  return frobenius(a, k) == a;
}

Fq Field::from_int(std::int64_t v) const {
  std::int64_t p = spec_.p;
  std::int64_t r = ((v % p) + p) % p;
  return from_index(static_cast<std::uint64_t>(r));
}

std::optional<std::uint32_t> Field::prime_value(Fq a) const {
  std::uint64_t idx = to_index(a);
  if (idx < spec_.p) return static_cast<std::uint32_t>(idx);
  return std::nullopt;
}

Fq Field::from_index(std::uint64_t index) const {
  if (index >= size_) throw FieldError("element index out of range");
  return Fq{log_[index]};
}

std::vector<std::uint32_t> Field::coeffs(Fq a) const {
  Digits d = to_digits(to_index(a), spec_.p, spec_.m);
  return {d.begin(), d.end()};
}

Fq Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != spec_.m) throw FieldError("coefficient vector has wrong length");
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= spec_.p) throw FieldError("coefficient out of range");
    idx = idx * spec_.p + coeffs[i];
  }
  return from_index(idx);
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m) {
  checked_size(p, m);
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, m}];
  if (!slot) slot = std::make_shared<const Field>(FieldSpec{p, m, select_modulus(p, m)});
  return slot;
}

FieldPtr field_from_spec(const FieldSpec& spec) {
  FieldPtr f = make_field(spec.p, spec.m);
  if (!(f->spec() == spec)) throw FieldError("field spec does not carry the deterministic modulus");
  return f;
}

// FieldElement

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field_ptr() != b.field_ptr() && !(a.field().spec() == b.field().spec())) {
    throw FieldError("arithmetic between elements of different fields");
  }
  return a.field();
}
}  // namespace

FieldElement FieldElement::from_coeffs(FieldPtr field, std::span<const std::uint32_t> coeffs) {
  Fq v = field->from_coeffs(coeffs);
  return {std::move(field), v};
}

FieldElement FieldElement::from_int(FieldPtr field, std::int64_t v) {
  Fq x = field->from_int(v);
  return {std::move(field), x};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field().spec() == b.field().spec() && a.value_ == b.value_;
}

// AdditiveMap

AdditiveMap::AdditiveMap(FieldPtr field, std::vector<AdditiveTerm> terms)
    : field_(std::move(field)), terms_(std::move(terms)) {
  if (terms_.empty()) throw FieldError("additive polynomial has no terms");
  const Field& F = *field_;
  const std::uint32_t p = F.characteristic();
  m_ = F.degree();
  const std::uint32_t m = m_;

  // Column k of A holds the coordinates of L(t^k).
  std::vector<std::uint32_t> a(m * m, 0);
  for (std::uint32_t k = 0; k < m; ++k) {
    std::vector<std::uint32_t> basis(m, 0);
    basis[k] = 1;
    auto img = F.coeffs(apply(F.from_coeffs(basis)));
    for (std::uint32_t r = 0; r < m; ++r) a[r * m + k] = img[r];
  }
  transform_.assign(m * m, 0);
  for (std::uint32_t i = 0; i < m; ++i) transform_[i * m + i] = 1;

  auto row_op = [&](std::vector<std::uint32_t>& mat, std::uint32_t dst, std::uint32_t src,
                    std::uint64_t factor) {  // dst -= factor * src
    for (std::uint32_t c = 0; c < m; ++c) {
      mat[dst * m + c] = static_cast<std::uint32_t>(
          (mat[dst * m + c] + (p - factor) * mat[src * m + c]) % p);
    }
  };
  auto row_scale = [&](std::vector<std::uint32_t>& mat, std::uint32_t r, std::uint64_t factor) {
    for (std::uint32_t c = 0; c < m; ++c)
      mat[r * m + c] = static_cast<std::uint32_t>(mat[r * m + c] * factor % p);
  };

  std::uint32_t row = 0;
  std::vector<bool> is_pivot(m, false);
  for (std::uint32_t col = 0; col < m && row < m; ++col) {
    std::uint32_t sel = row;
    while (sel < m && a[sel * m + col] == 0) ++sel;
    if (sel == m) continue;
    if (sel != row) {
      for (std::uint32_t c = 0; c < m; ++c) {
        std::swap(a[sel * m + c], a[row * m + c]);
        std::swap(transform_[sel * m + c], transform_[row * m + c]);
      }
    }
    std::uint64_t inv = pow_mod(a[row * m + col], p - 2, p);
    row_scale(a, row, inv);
    row_scale(transform_, row, inv);
    for (std::uint32_t r = 0; r < m; ++r) {
      if (r == row || a[r * m + col] == 0) continue;
      std::uint64_t factor = a[r * m + col];
      row_op(a, r, row, factor);
      row_op(transform_, r, row, factor);
    }
    pivot_col_.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  rank_ = row;

  std::vector<std::vector<std::uint32_t>> kernel_basis;
  for (std::uint32_t free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m, 0);
    v[free] = 1;
    for (std::uint32_t r = 0; r < rank_; ++r) v[pivot_col_[r]] = (p - a[r * m + free]) % p;
    kernel_basis.push_back(std::move(v));
  }
  kernel_.push_back(Field::zero());
  for (const auto& bv : kernel_basis) {
    const Fq b = F.from_coeffs(bv);
    const std::size_t base = kernel_.size();
    for (std::uint32_t mult = 1; mult < p; ++mult) {
      const Fq step = F.mul(F.from_int(mult), b);
      for (std::size_t i = 0; i < base; ++i) kernel_.push_back(F.add(kernel_[i], step));
    }
  }
}

Fq AdditiveMap::apply(Fq x) const {
  const Field& F = *field_;
  Fq acc = Field::zero();
  for (const auto& term : terms_) acc = F.add(acc, F.mul(term.coeff, F.frobenius(x, term.frob)));
  return acc;
}

std::optional<Fq> AdditiveMap::particular(Fq c) const {
  const Field& F = *field_;
  const std::uint32_t p = F.characteristic();
  const std::uint32_t m = m_;
  auto cc = F.coeffs(c);
  std::vector<std::uint32_t> x(m, 0);
  for (std::uint32_t r = 0; r < m; ++r) {
    std::uint64_t v = 0;
    for (std::uint32_t k = 0; k < m; ++k) v += std::uint64_t{transform_[r * m + k]} * cc[k] % p;
    v %= p;
    if (r >= rank_) {
      if (v != 0) return std::nullopt;
    } else {
      x[pivot_col_[r]] = static_cast<std::uint32_t>(v);
    }
  }
  return F.from_coeffs(x);
}

std::vector<Fq> AdditiveMap::solve(Fq c) const {
  auto x0 = particular(c);
  if (!x0) return {};
  std::vector<Fq> out;
  out.reserve(kernel_.size());
  for (Fq k : kernel_) out.push_back(field_->add(*x0, k));
  return out;
}

std::vector<FieldElement> solve_additive(
    std::span<const std::pair<FieldElement, std::uint32_t>> terms, const FieldElement& c) {
  if (terms.empty()) throw FieldError("additive polynomial has no terms");
  std::vector<AdditiveTerm> raw;
  for (const auto& [coeff, e] : terms) {
    if (!(coeff.field().spec() == c.field().spec())) {
      throw FieldError("arithmetic between elements of different fields");
    }
    raw.push_back({coeff.raw(), e});
  }
  AdditiveMap map(c.field_ptr(), std::move(raw));
  std::vector<FieldElement> out;
  for (Fq x : map.solve(c.raw())) out.emplace_back(c.field_ptr(), x);
  std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& b) {
    return a.field().to_index(a.raw()) < b.field().to_index(b.raw());
  });
  return out;
}

}  // namespace gk
