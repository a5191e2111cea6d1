#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "springerkit/ffield/matrix.hpp"

namespace springerkit {

/// Univariate polynomial over a finite field, coefficients low to high,
/// never carrying trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr field, std::vector<FieldElem> coeffs);

  static Poly constant(FieldPtr field, FieldElem c);
  static Poly x(FieldPtr field);
  /// Monic x - root.
  static Poly linear(FieldPtr field, FieldElem root);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  FieldElem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : FieldElem{0}; }
  FieldElem lead() const noexcept { return c_.empty() ? FieldElem{0} : c_.back(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].code == 1; }

  Poly monic() const;
  Poly derivative() const;
  FieldElem eval(FieldElem x) const;

  /// e.g. "x^2 + 4x + 1", coefficients printed with Field::format.
  std::string format(const std::string& var = "x") const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(FieldElem s, const Poly& a);

 private:
  void trim();

  FieldPtr field_;
  std::vector<FieldElem> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);

/// f(A) by Horner's rule.
Matrix evaluate(const Poly& f, const Matrix& a);

/// det(x I - A), computed through a Hessenberg reduction.
Poly charpoly(const Matrix& a);

struct PolyFactor {
  Poly factor;
  unsigned multiplicity = 1;
};

/// Factorization of a nonzero polynomial into monic irreducibles: square-free
/// decomposition, distinct-degree splitting, then Cantor-Zassenhaus equal-degree
/// splitting driven by `seed`. The leading coefficient is dropped. Output is
/// sorted by (degree, coefficients), so it does not depend on the seed.
std::vector<PolyFactor> factor(const Poly& f, std::uint64_t seed = 0);

std::vector<PolyFactor> factor_charpoly(const Matrix& m, std::uint64_t seed = 0);

bool is_irreducible(const Poly& f);

}  // namespace springerkit
