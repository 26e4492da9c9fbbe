#pragma once

// Finite fields GF(p^m) with a deterministic modulus.
//
// Elements are stored as discrete logarithms to a fixed primitive element
// (code 0 is zero, code k+1 is g^k). Addition goes through a Zech table, so
// every arithmetic operation is a table lookup. Power-basis coordinates are
// recovered through the exponential table.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gk {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest supported field size p^m (tables are O(p^m)).
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 22;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  /// Monic irreducible modulus over GF(p), constant term first, length m + 1.
  std::vector<std::uint32_t> modulus;

  std::uint64_t size() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Raw element handle. Only meaningful together with the Field that made it.
struct Fq {
  std::uint32_t code = 0;
  friend bool operator==(Fq, Fq) = default;
  friend auto operator<=>(Fq, Fq) = default;
};

class Field {
 public:
  /// Builds the tables for `spec`; the modulus must be monic and irreducible.
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t characteristic() const noexcept { return spec_.p; }
  std::uint32_t degree() const noexcept { return spec_.m; }
  std::uint64_t size() const noexcept { return size_; }

  static constexpr Fq zero() noexcept { return Fq{0}; }
  static constexpr Fq one() noexcept { return Fq{1}; }
  static constexpr bool is_zero(Fq a) noexcept { return a.code == 0; }

  Fq add(Fq a, Fq b) const noexcept {
    if (a.code == 0) return b;
    if (b.code == 0) return a;
    std::uint32_t la = a.code - 1, lb = b.code - 1;
    std::uint32_t d = lb >= la ? lb - la : lb + order_ - la;
    std::uint32_t z = zech_[d];
    if (z == 0) return zero();
    std::uint32_t s = la + (z - 1);
    if (s >= order_) s -= order_;
    return Fq{s + 1};
  }
  Fq neg(Fq a) const noexcept {
    if (a.code == 0) return a;
    return mul(a, minus_one_);
  }
  Fq sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const noexcept {
    if (a.code == 0 || b.code == 0) return zero();
    std::uint32_t s = (a.code - 1) + (b.code - 1);
    if (s >= order_) s -= order_;
    return Fq{s + 1};
  }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  /// Negative exponents are allowed for nonzero `a`.
  Fq pow(Fq a, std::int64_t e) const;
  /// a^(p^e).
  Fq frobenius(Fq a, std::uint64_t e) const;
  /// Multiplier for the log under a^(p^e); hoist it out of inner loops.
  std::uint64_t frobenius_factor(std::uint64_t e) const;
  Fq frobenius_with(Fq a, std::uint64_t factor) const noexcept {
    if (a.code == 0) return a;
    return Fq{static_cast<std::uint32_t>((std::uint64_t{a.code - 1} * factor) % order_) + 1};
  }

  /// True iff a lies in the subfield GF(p^k); k must divide m.
  bool in_subfield(Fq a, std::uint32_t k) const;

  /// Image of an integer in the prime field.
  Fq from_int(std::int64_t v) const;
  /// The integer value of `a` if it lies in the prime field.
  std::optional<std::uint32_t> prime_value(Fq a) const;

  /// Dense index sum c_i p^i of the power-basis coordinates.
  std::uint64_t to_index(Fq a) const noexcept {
    return a.code == 0 ? 0 : exp_[a.code - 1];
  }
  Fq from_index(std::uint64_t index) const;
  std::vector<std::uint32_t> coeffs(Fq a) const;
  Fq from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// The element t (class of the indeterminate), or the prime-field 0 when m == 1.
  Fq t() const { return from_index(spec_.m == 1 ? 0 : spec_.p); }
  /// The primitive element the logarithms are taken to.
  Fq generator() const noexcept { return Fq{order_ == 1 ? 1u : 2u}; }

 private:
  FieldSpec spec_;
  std::uint64_t size_ = 0;
  std::uint32_t order_ = 0;  // size - 1
  Fq minus_one_{};
  std::vector<std::uint32_t> exp_;   // log -> dense index
  std::vector<std::uint32_t> log_;   // dense index -> code
  std::vector<std::uint32_t> zech_;  // log d -> code of 1 + g^d
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// (p, e) with q = p^e, or nothing when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> as_prime_power(std::uint64_t q);

/// Irreducibility over GF(p) of a monic polynomial (constant term first).
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// First monic irreducible of degree m in the order of sum c_i p^i (i < m).
std::vector<std::uint32_t> select_modulus(std::uint32_t p, std::uint32_t m);

/// Shared, cached field GF(p^m) with the deterministic modulus.
FieldPtr make_field(std::uint32_t p, std::uint32_t m);

/// Field for a deserialized spec; rejects any modulus other than the
/// deterministic one for (p, m).
FieldPtr field_from_spec(const FieldSpec& spec);

/// Checked value type pairing an element with its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Fq value) : field_(std::move(field)), value_(value) {}

  static FieldElement from_coeffs(FieldPtr field, std::span<const std::uint32_t> coeffs);
  static FieldElement from_int(FieldPtr field, std::int64_t v);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  Fq raw() const noexcept { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const noexcept { return Field::is_zero(value_); }

  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
  FieldElement frobenius(std::uint64_t e) const { return {field_, field_->frobenius(value_, e)}; }
  bool in_subfield(std::uint32_t k) const { return field_->in_subfield(value_, k); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Fq value_;
};

/// One term coeff * x^(p^frob) of an additive polynomial.
struct AdditiveTerm {
  Fq coeff;
  std::uint32_t frob = 0;
};

/// An additive (GF(p)-linear) map on the field, reduced once so that each
/// solve is a small back substitution over the prime field.
class AdditiveMap {
 public:
  AdditiveMap(FieldPtr field, std::vector<AdditiveTerm> terms);

  Fq apply(Fq x) const;
  /// Every x with L(x) = c; empty or of size kernel().size().
  std::vector<Fq> solve(Fq c) const;
  /// One solution or nothing.
  std::optional<Fq> particular(Fq c) const;
  const std::vector<Fq>& kernel() const noexcept { return kernel_; }
  const Field& field() const noexcept { return *field_; }

 private:
  FieldPtr field_;
  std::vector<AdditiveTerm> terms_;
  std::uint32_t m_ = 0;
  std::uint32_t rank_ = 0;
  std::vector<std::uint32_t> transform_;  // E with E * A = R (row-major m x m)
  std::vector<std::uint32_t> pivot_col_;  // per row < rank
  std::vector<Fq> kernel_;
};

/// All solutions of sum a_i x^(p^e_i) = c.
std::vector<FieldElement> solve_additive(
    std::span<const std::pair<FieldElement, std::uint32_t>> terms, const FieldElement& c);

}  // namespace gk
