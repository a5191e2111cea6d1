#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace springerkit {

/// Element of GF(p^k). The code packs the coefficient vector (c_0, ..., c_{k-1})
/// of 1, t, ..., t^{k-1} as the base-p integer sum c_i p^i.
struct FieldElem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Random source used by every randomized routine; seeded explicitly by callers.
using Rng = std::mt19937_64;

/// The finite field GF(p^k), k >= 1, p^k <= 2^31.
///
/// For k > 1 the field is GF(p)[t]/(m(t)) where m is the least monic
/// irreducible of degree k, ordering candidates by the integer sum c_i p^i
/// over their non-leading coefficients. Construction is deterministic.
class Field {
 public:
  static FieldPtr make(std::uint32_t p, std::uint32_t degree = 1);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return q_; }

  /// Coefficients c_0..c_k of the monic modulus; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Image of an integer in the prime subfield.
  FieldElem from_int(std::int64_t value) const noexcept;
  /// Element with the given coefficients with respect to 1, t, ..., t^{k-1}.
  FieldElem from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem x) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  /// Requires a != 0.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;

  /// y += a * x, elementwise.
  void axpy(std::span<FieldElem> y, FieldElem a, std::span<const FieldElem> x) const noexcept;

  FieldElem random(Rng& rng) const;
  /// A generator of the multiplicative group.
  FieldElem primitive_element() const noexcept { return primitive_; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(FieldElem a) const;

  /// "3" for prime fields, "[c0,c1,...]" otherwise.
  std::string format(FieldElem x) const;
  /// e.g. "GF(4) = GF(2)[t]/(t^2 + t + 1)".
  std::string describe() const;

  bool same_as(const Field& other) const noexcept { return p_ == other.p_ && k_ == other.k_; }

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  FieldElem mul_poly(FieldElem a, FieldElem b) const noexcept;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  FieldElem primitive_{1};
  // Zech-style tables, present when k > 1 and q <= 2^16.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  // Addition table for small extension fields.
  std::vector<std::uint8_t> add_;
};

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace springerkit
