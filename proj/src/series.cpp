#include "gk/series.hpp"

#include <algorithm>
#include <sstream>

namespace gk {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (&a != &b && !(a.spec() == b.spec())) {
    throw FieldError("arithmetic between objects over different fields");
  }
}

}  // namespace

std::string to_string(const Valuation& v) {
  return v.exact ? std::to_string(v.value) : ">=" + std::to_string(v.value);
}

// TruncatedSeries

TruncatedSeries::TruncatedSeries(FieldPtr field, std::size_t precision)
    : field_(std::move(field)), coeffs_(precision, Field::zero()) {}

TruncatedSeries::TruncatedSeries(FieldPtr field, std::vector<Fq> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(FieldPtr field, Fq c, std::size_t precision) {
  return monomial(std::move(field), c, 0, precision);
}

TruncatedSeries TruncatedSeries::monomial(FieldPtr field, Fq c, std::size_t exponent,
                                          std::size_t precision) {
  TruncatedSeries s(std::move(field), precision);
  if (exponent < precision) s.coeffs_[exponent] = c;
  return s;
}

Valuation TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!Field::is_zero(coeffs_[i])) return Valuation::exactly(i);
  }
  return Valuation::at_least(coeffs_.size());
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
  std::vector<Fq> c(coeffs_.begin(), coeffs_.begin() + std::min(precision, coeffs_.size()));
  c.resize(std::min(precision, coeffs_.size()), Field::zero());
  return {field_, std::move(c)};
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_field(a.field(), b.field());
  const Field& F = a.field();
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Fq> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = F.add(a[i], b[i]);
  return {a.field_ptr(), std::move(c)};
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  const Field& F = a.field();
  std::vector<Fq> c(a.precision());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.neg(a[i]);
  return {a.field_ptr(), std::move(c)};
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_field(a.field(), b.field());
  const Field& F = a.field();
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Fq> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = F.sub(a[i], b[i]);
  return {a.field_ptr(), std::move(c)};
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_field(a.field(), b.field());
  const Field& F = a.field();
  const std::size_t va = a.valuation().value, vb = b.valuation().value;
  const std::size_t n = std::min(a.precision() + vb, b.precision() + va);
  std::vector<Fq> c(n, Field::zero());
  auto bc = b.coeffs();
  std::vector<std::pair<std::size_t, Fq>> b_nz;
  for (std::size_t j = 0; j < bc.size() && j < n; ++j)
    if (!Field::is_zero(bc[j])) b_nz.emplace_back(j, bc[j]);
  auto ac = a.coeffs();
  for (std::size_t i = 0; i < ac.size() && i < n; ++i) {
    if (Field::is_zero(ac[i])) continue;
    const Fq ai = ac[i];
    for (const auto& [j, bj] : b_nz) {
      if (i + j >= n) break;
      c[i + j] = F.add(c[i + j], F.mul(ai, bj));
    }
  }
  return {a.field_ptr(), std::move(c)};
}

TruncatedSeries scale(const TruncatedSeries& a, Fq s) {
  const Field& F = a.field();
  std::vector<Fq> c(a.precision());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.mul(a[i], s);
  return {a.field_ptr(), std::move(c)};
}

TruncatedSeries p_power(const TruncatedSeries& s, std::uint64_t e, std::size_t cap) {
  const Field& F = s.field();
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < e; ++i) q *= F.characteristic();
  if (cap == 0) cap = s.precision();
  const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(s.precision() * q, cap));
  const std::uint64_t factor = F.frobenius_factor(e);
  std::vector<Fq> c(n, Field::zero());
  for (std::size_t i = 0; i < s.precision() && i * q < n; ++i) {
    c[i * q] = F.frobenius_with(s[i], factor);
  }
  return {s.field_ptr(), std::move(c)};
}

TruncatedSeries one_plus_t_pow(FieldPtr field, std::uint64_t r, std::size_t precision) {
  const std::uint32_t p = field->characteristic();
  if (r % p == 0) {
    throw std::invalid_argument("(1+t)^r - 1 is not a local parameter when p divides r");
  }
  // Lucas: binomial(r, i) mod p is the product of digit binomials.
  auto small_binom = [p](std::uint64_t n, std::uint64_t k) -> std::uint64_t {
    if (k > n) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
      num = num * ((n - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    std::uint64_t inv = 1, b = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return num * inv % p;
  };
  TruncatedSeries s(field, precision);
  for (std::size_t i = 1; i < precision && i <= r; ++i) {
    std::uint64_t n = r, k = i, value = 1;
    while ((n > 0 || k > 0) && value != 0) {
      value = value * small_binom(n % p, k % p) % p;
      n /= p;
      k /= p;
    }
    s.set(i, field->from_int(static_cast<std::int64_t>(value)));
  }
  return s;
}

TruncatedSeries solve_as_series(const TruncatedSeries& s, std::uint64_t frob, ArtinSchreierSign sign) {
  const std::size_t n = s.precision();
  const Valuation v = s.valuation();
  if (!v.exact) return TruncatedSeries(s.field_ptr(), n);
  if (v.value == 0) throw std::invalid_argument("Artin-Schreier series needs val(s) >= 1");
  if (frob == 0) throw std::invalid_argument("Frobenius exponent must be positive");

  // plus: xi = s - s^Q + s^(Q^2) - ...   minus: xi = -(s + s^Q + s^(Q^2) + ...)
  TruncatedSeries acc(s.field_ptr(), n);
  TruncatedSeries term = s;
  bool negative = sign == ArtinSchreierSign::minus;
  while (term.valuation().exact) {
    acc = negative ? acc - term : acc + term;
    term = p_power(term, frob, n);
    if (sign == ArtinSchreierSign::plus) negative = !negative;
  }
  return acc;
}

// SparsePoly

SparsePoly::SparsePoly(FieldPtr field, unsigned nvars) : field_(std::move(field)), nvars_(nvars) {
  if (nvars < 1 || nvars > 3) throw std::invalid_argument("SparsePoly supports 1 to 3 variables");
}

SparsePoly SparsePoly::constant(FieldPtr field, unsigned nvars, Fq c) {
  return monomial(std::move(field), nvars, {0, 0, 0}, c);
}

SparsePoly SparsePoly::variable(FieldPtr field, unsigned nvars, unsigned index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  Exponents e{0, 0, 0};
  e[index] = 1;
  return monomial(std::move(field), nvars, e, Field::one());
}

SparsePoly SparsePoly::monomial(FieldPtr field, unsigned nvars, Exponents e, Fq c) {
  SparsePoly p(std::move(field), nvars);
  p.add_term(e, c);
  return p;
}

Fq SparsePoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Field::zero() : it->second;
}

void SparsePoly::add_term(const Exponents& e, Fq c) {
  if (Field::is_zero(c)) return;
  for (unsigned i = nvars_; i < 3; ++i) {
    if (e[i] != 0) throw std::invalid_argument("exponent for a variable the polynomial lacks");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (Field::is_zero(it->second)) terms_.erase(it);
  }
}

std::uint32_t SparsePoly::degree_in(unsigned var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_field(*field_, *o.field_);
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_field(*field_, *o.field_);
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, field_->neg(c));
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_same_field(*a.field_, *b.field_);
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  const Field& F = *a.field_;
  SparsePoly out(a.field_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, F.mul(ca, cb));
    }
  }
  return out;
}

SparsePoly SparsePoly::operator-() const { return scaled(field_->neg(Field::one())); }

SparsePoly SparsePoly::scaled(Fq c) const {
  SparsePoly out(field_, nvars_);
  for (const auto& [e, v] : terms_) out.add_term(e, field_->mul(v, c));
  return out;
}

SparsePoly SparsePoly::pow(std::uint32_t e) const {
  SparsePoly result = constant(field_, nvars_, Field::one());
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::frobenius(std::uint64_t e) const {
  std::uint32_t q = 1;
  for (std::uint64_t i = 0; i < e; ++i) q *= field_->characteristic();
  const std::uint64_t factor = field_->frobenius_factor(e);
  SparsePoly out(field_, nvars_);
  for (const auto& [ex, c] : terms_) {
    out.add_term({ex[0] * q, ex[1] * q, ex[2] * q}, field_->frobenius_with(c, factor));
  }
  return out;
}

SparsePoly SparsePoly::substitute_scaled(unsigned nvars, unsigned var, Fq c) const {
  if (nvars_ != 1) throw std::invalid_argument("substitute_scaled expects a univariate polynomial");
  if (var >= nvars) throw std::invalid_argument("variable index out of range");
  SparsePoly out(field_, nvars);
  for (const auto& [e, v] : terms_) {
    Exponents ex{0, 0, 0};
    ex[var] = e[0];
    out.add_term(ex, field_->mul(v, field_->pow(c, e[0])));
  }
  return out;
}

SparsePoly SparsePoly::lift_to_xyz() const {
  if (nvars_ != 2) throw std::invalid_argument("lift_to_xyz expects a (y, z) polynomial");
  SparsePoly out(field_, 3);
  for (const auto& [e, v] : terms_) out.add_term({0, e[0], e[1]}, v);
  return out;
}

SparsePoly SparsePoly::embed_prime_coeffs(FieldPtr target) const {
  if (target->characteristic() != field_->characteristic()) {
    throw FieldError("cannot embed across characteristics");
  }
  SparsePoly out(target, nvars_);
  for (const auto& [e, v] : terms_) {
    auto pv = field_->prime_value(v);
    if (!pv) throw FieldError("coefficient outside the prime field");
    out.add_term(e, target->from_int(*pv));
  }
  return out;
}

Fq SparsePoly::evaluate(std::span<const Fq> values) const {
  if (values.size() < nvars_) throw std::invalid_argument("too few values for evaluation");
  const Field& F = *field_;
  Fq acc = Field::zero();
  for (const auto& [e, c] : terms_) {
    Fq term = c;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i]) term = F.mul(term, F.pow(values[i], e[i]));
    }
    acc = F.add(acc, term);
  }
  return acc;
}

std::string SparsePoly::to_string() const {
  static const char* names1[] = {"t"};
  static const char* names2[] = {"y", "z"};
  static const char* names3[] = {"x", "y", "z"};
  const char* const* names = nvars_ == 1 ? names1 : nvars_ == 2 ? names2 : names3;
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool any_var = false;
    for (unsigned i = 0; i < nvars_; ++i) any_var = any_var || e[i] != 0;
    // Coefficients print as dense element indices.
    if (!any_var) {
      os << field_->to_index(c);
      continue;
    }
    bool need_star = false;
    if (c != Field::one()) {
      os << field_->to_index(c);
      need_star = true;
    }
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.nvars_ == b.nvars_ && a.field_->spec() == b.field_->spec() && a.terms_ == b.terms_;
}

}  // namespace gk
