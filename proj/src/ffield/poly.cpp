#include "springerkit/ffield/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "springerkit/error.hpp"

namespace springerkit {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!a.field() || !b.field() || !a.field()->same_as(*b.field()))
    throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
}

bool factor_less(const PolyFactor& a, const PolyFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coeffs();
  const auto& cb = b.factor.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

Poly pth_root(const Poly& f) {
  const Field& fld = *f.field();
  const std::uint32_t p = fld.characteristic();
  // a^(1/p) = a^(p^(k-1)) in GF(p^k).
  std::uint64_t e = 1;
  for (std::uint32_t i = 1; i < fld.degree(); ++i) e *= p;
  std::vector<FieldElem> out(static_cast<std::size_t>(f.degree()) / p + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fld.pow(f.coeff(i * p), e);
  return Poly(f.field(), std::move(out));
}

void square_free(const Poly& f, unsigned mult, std::vector<PolyFactor>& out) {
  if (f.degree() <= 0) return;
  const Poly d = f.derivative();
  Poly r = gcd(f, d);
  Poly w = f / r;
  unsigned i = 1;
  while (!w.is_one()) {
    const Poly y = gcd(w, r);
    const Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
    w = y;
    r = r / y;
    ++i;
  }
  if (r.degree() > 0) square_free(pth_root(r), mult * f.field()->characteristic(), out);
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const FieldPtr& field = f.field();
  const Poly x = Poly::x(field);
  const std::uint64_t q = field->order();
  Poly h = x % f;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    h = powmod(h, q, f);
    const Poly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

Poly random_poly(const FieldPtr& field, int below_degree, Rng& rng) {
  std::vector<FieldElem> c(static_cast<std::size_t>(below_degree));
  for (auto& x : c) x = field->random(rng);
  return Poly(field, std::move(c));
}

void equal_degree(const Poly& f, unsigned d, Rng& rng, std::vector<Poly>& out) {
  if (static_cast<unsigned>(f.degree()) == d) {
    out.push_back(f.monic());
    return;
  }
  const FieldPtr& field = f.field();
  const Field& fld = *field;
  const std::uint64_t q = fld.order();
  for (;;) {
    Poly a = random_poly(field, f.degree(), rng);
    if (a.degree() <= 0) continue;
    Poly b;
    if (q % 2 == 1) {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      Poly s = Poly::constant(field, fld.one());
      Poly t = a % f;
      for (unsigned i = 0; i < d; ++i) {
        s = (s * t) % f;
        t = powmod(t, q, f);
      }
      b = powmod(s, (q - 1) / 2, f) - Poly::constant(field, fld.one());
    } else {
      // Absolute trace to GF(2): sum of a^(2^i), i < k d.
      const unsigned m = fld.degree() * d;
      Poly t = a % f;
      b = t;
      for (unsigned i = 1; i < m; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    }
    const Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<FieldElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr field, FieldElem c) { return Poly(std::move(field), {c}); }

Poly Poly::x(FieldPtr field) { return Poly(std::move(field), {FieldElem{0}, FieldElem{1}}); }

Poly Poly::linear(FieldPtr field, FieldElem root) {
  const FieldElem c = field->neg(root);
  return Poly(std::move(field), {c, FieldElem{1}});
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return field_->inv(lead()) * *this;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_, {});
  std::vector<FieldElem> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())), c_[i]);
  return Poly(field_, std::move(d));
}

FieldElem Poly::eval(FieldElem x) const {
  FieldElem acc{0};
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::format(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].code == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].code == 1;
    if (i == 0 || !unit) os << field_->format(c_[i]);
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.field_ && b.field_ && !a.field_->same_as(*b.field_)) return false;
  return a.c_ == b.c_;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  std::vector<FieldElem> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_->add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  std::vector<FieldElem> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_->sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_, {});
  std::vector<FieldElem> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    a.field_->axpy(std::span<FieldElem>(c.data() + i, b.c_.size()), a.c_[i], b.c_);
  return Poly(a.field_, std::move(c));
}

Poly operator*(FieldElem s, const Poly& a) {
  std::vector<FieldElem> c = a.c_;
  for (auto& x : c) x = a.field_->mul(s, x);
  return Poly(a.field_, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DimensionMismatch, "polynomial division by zero");
  const Field& f = *a.field();
  std::vector<FieldElem> r = a.coeffs();
  const auto& bc = b.coeffs();
  if (r.size() < bc.size()) return {Poly(a.field(), {}), a};
  std::vector<FieldElem> quot(r.size() - bc.size() + 1);
  const FieldElem lead_inv = f.inv(b.lead());
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const FieldElem c = f.mul(r[shift + bc.size() - 1], lead_inv);
    quot[shift] = c;
    if (c.code != 0) f.axpy(std::span<FieldElem>(r.data() + shift, bc.size()), f.neg(c), bc);
  }
  r.resize(bc.size() - 1);
  return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(mod.field(), mod.field()->one()) % mod;
  base = base % mod;
  while (e > 0) {
    if (e & 1U) result = (result * base) % mod;
    e >>= 1U;
    if (e > 0) base = (base * base) % mod;
  }
  return result;
}

Matrix evaluate(const Poly& f, const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix acc(a.field(), n, n);
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t j = 0; j < n; ++j) acc(j, j) = a.f().add(acc(j, j), c[i]);
  }
  return acc;
}

Poly charpoly(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  const Field& f = a.f();
  const std::size_t n = a.rows();
  Matrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j).code == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const FieldElem inv = f.inv(h(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const FieldElem m = f.mul(h(i, j), inv);
      if (m.code == 0) continue;
      // row_i -= m row_{j+1}; col_{j+1} += m col_i
      for (std::size_t c = 0; c < n; ++c) h(i, c) = f.sub(h(i, c), f.mul(m, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(m, h(r, i)));
    }
  }
  const FieldPtr& field = a.field();
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(field, f.one()));
  for (std::size_t m = 1; m <= n; ++m) {
    Poly next = Poly::linear(field, h(m - 1, m - 1)) * p[m - 1];
    FieldElem t = f.one();
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, h(i, i - 1));
      const FieldElem c = f.mul(h(i - 1, m - 1), t);
      if (c.code != 0) next = next - c * p[i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

std::vector<PolyFactor> factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::DimensionMismatch, "cannot factor the zero polynomial");
  Rng rng(seed);
  std::vector<PolyFactor> sqfree;
  square_free(f.monic(), 1, sqfree);
  std::vector<PolyFactor> out;
  for (const auto& [g, mult] : sqfree) {
    for (const auto& [part, d] : distinct_degree(g)) {
      std::vector<Poly> pieces;
      equal_degree(part, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  // A factor can reappear from different square-free layers only in
  // characteristic p; merge those.
  std::vector<PolyFactor> merged;
  for (auto& pf : out) {
    if (!merged.empty() && merged.back().factor == pf.factor)
      merged.back().multiplicity += pf.multiplicity;
    else
      merged.push_back(std::move(pf));
  }
  return merged;
}

std::vector<PolyFactor> factor_charpoly(const Matrix& m, std::uint64_t seed) {
  return factor(charpoly(m), seed);
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  const auto fs = factor(f, 0);
  return fs.size() == 1 && fs.front().multiplicity == 1;
}

}  // namespace springerkit
