#include "springerkit/ffield/field.hpp"

#include <algorithm>
#include <sstream>

#include "springerkit/error.hpp"

namespace springerkit {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
constexpr std::uint64_t kTableOrder = std::uint64_t{1} << 16;

// Dense polynomials over GF(p), coefficients low to high. Only used while
// searching for a modulus, before any Field object exists.
using RawPoly = std::vector<std::uint64_t>;

void trim(RawPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // m is monic.
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = prod.size(); i-- > dm;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) prod[i - dm + j] = (prod[i - dm + j] + (p - c) * m[j]) % p;
  }
  prod.resize(std::min(prod.size(), dm));
  trim(prod);
  return prod;
}

RawPoly raw_powmod(RawPoly base, std::uint64_t e, const RawPoly& m, std::uint64_t p) {
  RawPoly result{1};
  while (e > 0) {
    if (e & 1U) result = raw_mulmod(result, base, m, p);
    e >>= 1U;
    if (e > 0) base = raw_mulmod(base, base, m, p);
  }
  return result;
}

RawPoly raw_mod(RawPoly a, const RawPoly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + (p - c) * b[j]) % p;
    trim(a);
  }
  return a;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RawPoly r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^j) mod m
RawPoly frobenius_power(const RawPoly& m, std::uint64_t p, std::uint32_t j) {
  RawPoly h{0, 1};
  h = raw_mod(h, m, p);
  for (std::uint32_t i = 0; i < j; ++i) h = raw_powmod(h, p, m, p);
  return h;
}

// Rabin's irreducibility test for a monic polynomial of degree k.
bool raw_is_irreducible(const RawPoly& m, std::uint64_t p) {
  const auto k = static_cast<std::uint32_t>(m.size() - 1);
  RawPoly h = frobenius_power(m, p, k);
  RawPoly x{0, 1};
  x = raw_mod(x, m, p);
  if (h != x) return false;
  for (std::uint64_t r : prime_factors(k)) {
    RawPoly g = frobenius_power(m, p, static_cast<std::uint32_t>(k / r));
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    RawPoly d = raw_gcd(m, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    RawPoly m(k + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      m[i] = c % p;
      c /= p;
    }
    m[k] = 1;
    if (m[0] == 0) continue;  // divisible by t
    if (raw_is_irreducible(m, p)) return {m.begin(), m.end()};
  }
  throw Error(ErrorKind::NotPrime, "no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
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

FieldPtr Field::make(std::uint32_t p, std::uint32_t degree) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (degree == 0) throw Error(ErrorKind::TooLarge, "field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorKind::TooLarge,
                  "GF(" + std::to_string(p) + "^" + std::to_string(degree) + ") exceeds 2^31 elements");
  }
  std::vector<std::uint32_t> modulus;
  if (degree > 1) modulus = least_irreducible(p, degree);
  return FieldPtr(new Field(p, degree, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
  if (k_ > 1 && q_ <= 256) {
    add_.resize(q_ * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t r = 0, mult = 1, x = a, y = b;
        for (std::uint32_t i = 0; i < k_; ++i) {
          r += ((x % p_ + y % p_) % p_) * mult;
          x /= p_;
          y /= p_;
          mult *= p_;
        }
        add_[a * q_ + b] = static_cast<std::uint8_t>(r);
      }
  }
  // Primitive element: least code whose order is q - 1.
  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(n);
  for (std::uint64_t c = 1; c < q_; ++c) {
    FieldElem g{static_cast<std::uint32_t>(c)};
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (pow(g, n / r) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = g;
      break;
    }
  }
  if (k_ > 1 && q_ <= kTableOrder) build_tables();
}

void Field::build_tables() {
  const std::uint64_t n = q_ - 1;
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  FieldElem x = one();
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = x.code;
    log_[x.code] = static_cast<std::uint32_t>(i);
    x = mul_poly(x, primitive_);
  }
  for (std::uint64_t i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
}

FieldElem Field::from_int(std::int64_t value) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint32_t>(((value % p) + p) % p)};
}

FieldElem Field::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != k_)
    throw Error(ErrorKind::FieldMismatch, "expected " + std::to_string(k_) + " coefficients, got " +
                                              std::to_string(coeffs.size()));
  std::uint64_t code = 0, mult = 1;
  for (std::int64_t c : coeffs) {
    code += from_int(c).code * mult;
    mult *= p_;
  }
  return {static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElem x) const {
  std::vector<std::uint32_t> out(k_);
  std::uint32_t c = x.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

FieldElem Field::add(FieldElem a, FieldElem b) const noexcept {
  if (k_ == 1) {
    std::uint64_t s = std::uint64_t{a.code} + b.code;
    if (s >= p_) s -= p_;
    return {static_cast<std::uint32_t>(s)};
  }
  if (!add_.empty()) return {add_[a.code * q_ + b.code]};
  std::uint32_t r = 0, mult = 1, x = a.code, y = b.code;
  while (x != 0 || y != 0) {
    r += ((x % p_ + y % p_) % p_) * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return {r};
}

FieldElem Field::neg(FieldElem a) const noexcept {
  if (k_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
  std::uint32_t r = 0, mult = 1, x = a.code;
  while (x != 0) {
    r += ((p_ - x % p_) % p_) * mult;
    x /= p_;
    mult *= p_;
  }
  return {r};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const noexcept {
  if (k_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
  if (a.code == 0 || b.code == 0) return {0};
  if (!log_.empty()) return {exp_[log_[a.code] + log_[b.code]]};
  return mul_poly(a, b);
}

FieldElem Field::mul_poly(FieldElem a, FieldElem b) const noexcept {
  if (k_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
  std::vector<std::uint64_t> x(k_), y(k_), prod(2 * k_ - 1, 0);
  std::uint32_t ca = a.code, cb = b.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    x[i] = ca % p_;
    y[i] = cb % p_;
    ca /= p_;
    cb /= p_;
  }
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  }
  for (std::size_t i = prod.size(); i-- > k_;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j <= k_; ++j) prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  std::uint64_t code = 0, mult = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    code += prod[i] * mult;
    mult *= p_;
  }
  return {static_cast<std::uint32_t>(code)};
}

FieldElem Field::inv(FieldElem a) const {
  if (a.code == 0) throw Error(ErrorKind::SingularMatrix, "inverse of zero field element");
  if (k_ == 1) return {static_cast<std::uint32_t>(inv_mod(a.code, p_))};
  if (!log_.empty()) {
    const std::uint64_t n = q_ - 1;
    return {exp_[(n - log_[a.code]) % n]};
  }
  return pow(a, q_ - 2);
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  if (!log_.empty()) {
    const std::uint64_t n = q_ - 1;
    return {exp_[(std::uint64_t{log_[a.code]} * (e % n)) % n]};
  }
  FieldElem result = one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1U) result = mul_poly(result, base);
    e >>= 1U;
    if (e > 0) base = mul_poly(base, base);
  }
  return result;
}

void Field::axpy(std::span<FieldElem> y, FieldElem a, std::span<const FieldElem> x) const noexcept {
  if (a.code == 0) return;
  if (k_ == 1) {
    const std::uint64_t av = a.code;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (x[i].code == 0) continue;
      y[i].code = static_cast<std::uint32_t>((y[i].code + av * x[i].code) % p_);
    }
    return;
  }
  if (!log_.empty()) {
    const std::uint32_t la = log_[a.code];
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (x[i].code == 0) continue;
      y[i] = add(y[i], FieldElem{exp_[la + log_[x[i].code]]});
    }
    return;
  }
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = add(y[i], mul(a, x[i]));
}

FieldElem Field::random(Rng& rng) const { return {static_cast<std::uint32_t>(rng() % q_)}; }

std::uint64_t Field::multiplicative_order(FieldElem a) const {
  if (a.code == 0) throw Error(ErrorKind::SingularMatrix, "zero has no multiplicative order");
  std::uint64_t n = q_ - 1;
  for (std::uint64_t r : prime_factors(q_ - 1)) {
    while (n % r == 0 && pow(a, n / r) == one()) n /= r;
  }
  return n;
}

std::string Field::format(FieldElem x) const {
  if (k_ == 1) return std::to_string(x.code);
  std::ostringstream os;
  os << '[';
  const auto c = coeffs(x);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (k_ > 1) {
    os << " = GF(" << p_ << ")[t]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      const std::uint32_t c = modulus_[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i >= 1) os << "t";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace springerkit
