#pragma once

// Exact sparse polynomials (in t, in (y, z), or in (x, y, z)) and truncated
// power series in a local parameter t.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gk/gf.hpp"

namespace gk {

/// Valuation of a truncated series: either exact, or only known to be at
/// least the precision (the series is zero modulo t^N).
struct Valuation {
  bool exact = false;
  std::size_t value = 0;

  static Valuation exactly(std::size_t v) { return {true, v}; }
  static Valuation at_least(std::size_t v) { return {false, v}; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

std::string to_string(const Valuation& v);

class TruncatedSeries {
 public:
  TruncatedSeries(FieldPtr field, std::size_t precision);
  TruncatedSeries(FieldPtr field, std::vector<Fq> coeffs);

  static TruncatedSeries constant(FieldPtr field, Fq c, std::size_t precision);
  static TruncatedSeries monomial(FieldPtr field, Fq c, std::size_t exponent, std::size_t precision);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t precision() const noexcept { return coeffs_.size(); }
  std::span<const Fq> coeffs() const noexcept { return coeffs_; }
  Fq operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Field::zero(); }
  void set(std::size_t i, Fq c) { coeffs_.at(i) = c; }

  Valuation valuation() const;
  TruncatedSeries truncated(std::size_t precision) const;

 private:
  FieldPtr field_;
  std::vector<Fq> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
/// Product known modulo t^min(Na + val b, Nb + val a).
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Fq c);

/// s^(p^e). The precision grows to N p^e and is then capped at `cap`
/// (cap = 0 keeps the input precision).
TruncatedSeries p_power(const TruncatedSeries& s, std::uint64_t e, std::size_t cap = 0);

/// (1+t)^r - 1; rejects r divisible by the characteristic.
TruncatedSeries one_plus_t_pow(FieldPtr field, std::uint64_t r, std::size_t precision);

enum class ArtinSchreierSign { plus, minus };

/// The unique xi with val(xi) >= 1 and xi^(p^frob) + xi = s (plus) or
/// xi^(p^frob) - xi = s (minus). Requires val(s) >= 1.
TruncatedSeries solve_as_series(const TruncatedSeries& s, std::uint64_t frob, ArtinSchreierSign sign);

class SparsePoly {
 public:
  using Exponents = std::array<std::uint32_t, 3>;
  using Terms = std::map<Exponents, Fq>;

  /// nvars 1: (t); 2: (y, z); 3: (x, y, z). Unused slots stay zero.
  SparsePoly(FieldPtr field, unsigned nvars);

  static SparsePoly constant(FieldPtr field, unsigned nvars, Fq c);
  static SparsePoly variable(FieldPtr field, unsigned nvars, unsigned index);
  static SparsePoly monomial(FieldPtr field, unsigned nvars, Exponents e, Fq c);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  unsigned nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Fq coeff(const Exponents& e) const;
  /// Adds c * monomial(e), dropping the term if it cancels.
  void add_term(const Exponents& e, Fq c);
  std::uint32_t degree_in(unsigned var) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;
  SparsePoly scaled(Fq c) const;
  SparsePoly pow(std::uint32_t e) const;
  /// P^(p^e) = sum c^(p^e) X^(p^e * exponents).
  SparsePoly frobenius(std::uint64_t e) const;

  /// Univariate polynomial u(t) becomes u(c * X_var) in `nvars` variables.
  SparsePoly substitute_scaled(unsigned nvars, unsigned var, Fq c) const;
  /// Re-embeds a (y, z) polynomial into (x, y, z).
  SparsePoly lift_to_xyz() const;
  /// Maps coefficients lying in the prime field into another field.
  SparsePoly embed_prime_coeffs(FieldPtr target) const;

  Fq evaluate(std::span<const Fq> values) const;
  std::string to_string() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  FieldPtr field_;
  unsigned nvars_;
  Terms terms_;
};

}  // namespace gk
