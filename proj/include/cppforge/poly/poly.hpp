#pragma once

// Dense univariate polynomials over a runtime field, constant term first.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cppforge/gf/field.hpp"

namespace cppforge::poly {

using gf::Code;
using gf::Field;
using gf::FieldPtr;

class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr f) : field_(std::move(f)) { check(); }
  Poly(FieldPtr f, std::vector<Code> c) : field_(std::move(f)), c_(std::move(c)) {
    check();
    for (Code x : c_) {
      if (!field_->contains(x)) throw Error(Errc::InvalidArgument, "coefficient outside field");
    }
    trim();
  }

  /// Coefficients given as integers, reduced into the prime field.
  static Poly fromInts(FieldPtr f, std::initializer_list<std::int64_t> c) {
    std::vector<Code> v;
    for (auto x : c) v.push_back(f->fromInt(x));
    return {std::move(f), std::move(v)};
  }
  static Poly constant(FieldPtr f, Code c) { return {std::move(f), std::vector<Code>{c}}; }
  static Poly monomial(FieldPtr f, Code c, std::size_t deg) {
    std::vector<Code> v(deg + 1, 0);
    v[deg] = c;
    return {std::move(f), std::move(v)};
  }
  static Poly x(FieldPtr f) { return monomial(std::move(f), 1, 1); }
  /// x - r
  static Poly linear(FieldPtr f, Code r) {
    Code nr = f->neg(r);
    return {std::move(f), std::vector<Code>{nr, 1}};
  }

  const FieldPtr& field() const noexcept { return field_; }
  const Field& F() const noexcept { return *field_; }
  const std::vector<Code>& coeffs() const noexcept { return c_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const noexcept { return c_.empty(); }
  bool isOne() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool isConstant() const noexcept { return c_.size() <= 1; }
  Code coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Code lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  bool isMonic() const noexcept { return !c_.empty() && c_.back() == 1; }

  Code eval(Code x) const {
    Code r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
    return r;
  }

  Poly scaled(Code s) const {
    if (s == 0) return Poly(field_);
    std::vector<Code> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], s);
    return {field_, std::move(v)};
  }

  Poly monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(field_->inv(c_.back()));
  }

  Poly operator-() const {
    std::vector<Code> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->neg(c_[i]);
    return {field_, std::move(v)};
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    gf::requireSameField(*a.field_, *b.field_);
    std::vector<Code> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_->add(a.coeff(i), b.coeff(i));
    return {a.field_, std::move(v)};
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    gf::requireSameField(*a.field_, *b.field_);
    std::vector<Code> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_->sub(a.coeff(i), b.coeff(i));
    return {a.field_, std::move(v)};
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    gf::requireSameField(*a.field_, *b.field_);
    return {a.field_, mulCoeffs(*a.field_, a.c_, b.c_)};
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_ != b.c_) return false;
    if (!a.field_ || !b.field_) return a.field_ == b.field_;
    return a.field_->sameAs(*b.field_);
  }

  /// Same coefficients viewed over another field on the same chain.
  Poly over(FieldPtr target) const {
    if (target->hasSubfield(*field_)) return {std::move(target), c_};
    if (field_->hasSubfield(*target)) {
      for (Code x : c_) {
        if (x >= target->size()) throw Error(Errc::CoefficientsOutsideSubfield, "coefficient not in subfield");
      }
      return {std::move(target), c_};
    }
    throw Error(Errc::NotAnExtension, field_->describe() + " and " + target->describe() + " are not nested");
  }

  std::string toString() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      if (c_[i] != 1 || i == 0) s += "[" + std::to_string(c_[i]) + "]";
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  static std::vector<Code> mulCoeffs(const Field& F, const std::vector<Code>& a, const std::vector<Code>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Code> out(a.size() + b.size() - 1, 0);
    if (F.isPrimeField()) {
      const u64 p = F.characteristic();
      std::vector<u128> acc(out.size(), 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<u128>(a[i]) * b[j];
      }
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<Code>(acc[k] % p);
      return out;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] != 0) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
      }
    }
    return out;
  }

 private:
  void check() const {
    if (!field_) throw Error(Errc::InvalidArgument, "polynomial without field");
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  FieldPtr field_;
  std::vector<Code> c_;
};

/// f = q*g + r with deg r < deg g.
inline std::pair<Poly, Poly> divRem(const Poly& f, const Poly& g) {
  gf::requireSameField(f.F(), g.F());
  if (g.isZero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  const Field& F = f.F();
  if (f.degree() < g.degree()) return {Poly(f.field()), f};
  std::vector<Code> r = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  std::vector<Code> q(r.size() - dg, 0);
  const Code li = F.inv(gc.back());
  for (std::size_t k = r.size(); k-- > dg;) {
    const Code c = r[k];
    if (c == 0) continue;
    const Code t = li == 1 ? c : F.mul(c, li);
    q[k - dg] = t;
    for (std::size_t j = 0; j < dg; ++j) {
      if (gc[j] != 0) r[k - dg + j] = F.sub(r[k - dg + j], F.mul(t, gc[j]));
    }
    r[k] = 0;
  }
  r.resize(dg);
  return {Poly(f.field(), std::move(q)), Poly(f.field(), std::move(r))};
}

inline Poly operator/(const Poly& f, const Poly& g) { return divRem(f, g).first; }
inline Poly operator%(const Poly& f, const Poly& g) { return divRem(f, g).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  gf::requireSameField(a.F(), b.F());
  while (!b.isZero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Poly derivative(const Poly& f) {
  const Field& F = f.F();
  std::vector<Code> v;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) v.push_back(F.mul(F.fromInt(static_cast<std::int64_t>(i % F.characteristic())), f.coeff(i)));
  return {f.field(), std::move(v)};
}

/// f(g(x)).
inline Poly compose(const Poly& f, const Poly& g) {
  gf::requireSameField(f.F(), g.F());
  Poly r(f.field());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) r = r * g + Poly::constant(f.field(), f.coeff(i));
  return r;
}

/// f(x + e).
inline Poly shift(const Poly& f, Code e) { return compose(f, Poly(f.field(), {e, 1})); }

inline Poly mulMod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly powMod(Poly base, u64 e, const Poly& m) {
  Poly result = Poly::constant(m.field(), 1) % m;
  base = base % m;
  while (e) {
    if (e & 1) result = mulMod(result, base, m);
    e >>= 1;
    if (e) base = mulMod(base, base, m);
  }
  return result;
}

inline Poly pow(Poly base, u64 e) {
  Poly result = Poly::constant(base.field(), 1);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

/// Product of (x - r) over the given roots.
inline Poly fromRoots(const FieldPtr& f, const std::vector<Code>& roots) {
  Poly r = Poly::constant(f, 1);
  for (Code x : roots) r *= Poly::linear(f, x);
  return r;
}

}  // namespace cppforge::poly
