#pragma once

// Runtime finite fields F_{p^k}, presented as a chain of simple extensions
// F_p ⊂ B_1 ⊂ ... ⊂ F, each level B_{i+1} = B_i[y]/(modulus).
//
// Elements are canonical integer codes: the base-p encoding of the flat
// coefficient vector (constant coefficient of the lowest level first). An
// element of a base level keeps the same code in every extension above it,
// so embedding along the chain is the identity on codes.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cppforge/error.hpp"
#include "cppforge/gf/numtheory.hpp"

namespace cppforge::gf {

using Code = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Fields up to this size get discrete log/exp tables; larger fields fall
/// back to schoolbook arithmetic through the tower.
inline constexpr u64 kTableLimit = u64{1} << 22;

class Field {
  struct Token {};

 public:
  Field(Token, u64 p) : p_(p), degree_(1), absDegree_(1), size_(p), modulus_{0, 1} {}

  Field(Token, FieldPtr base, std::vector<Code> modulus)
      : p_(base->p_),
        degree_(static_cast<unsigned>(modulus.size() - 1)),
        absDegree_(base->absDegree_ * degree_),
        base_(std::move(base)),
        modulus_(std::move(modulus)) {
    size_ = *checkedPow(base_->size_, degree_);
  }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  static FieldPtr makePrime(u64 p) {
    if (!isPrime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p > maxFieldSize()) throw Error(Errc::FieldTooLarge, "prime exceeds field size cap");
    return std::make_shared<const Field>(Token{}, p);
  }

  /// Extension base[y]/(modulus). The modulus must be monic with coefficients
  /// in `base`; irreducibility is the caller's responsibility (see mkField).
  static FieldPtr makeExtension(FieldPtr base, std::vector<Code> modulus) {
    if (!base) throw Error(Errc::InvalidArgument, "null base field");
    if (modulus.size() < 2) throw Error(Errc::DegreeZero, "extension modulus must have degree >= 1");
    if (modulus.back() != 1) throw Error(Errc::InvalidArgument, "extension modulus must be monic");
    for (Code c : modulus) {
      if (c >= base->size()) throw Error(Errc::InvalidArgument, "modulus coefficient outside base field");
    }
    const unsigned deg = static_cast<unsigned>(modulus.size() - 1);
    auto sz = checkedPow(base->size(), deg, maxFieldSize());
    if (!sz) throw Error(Errc::FieldTooLarge, "extension exceeds field size cap");
    return std::make_shared<const Field>(Token{}, std::move(base), std::move(modulus));
  }

  u64 characteristic() const noexcept { return p_; }
  /// Degree over the immediate base (1 for a prime field).
  unsigned degree() const noexcept { return degree_; }
  /// Degree over the prime field.
  unsigned absDegree() const noexcept { return absDegree_; }
  u64 size() const noexcept { return size_; }
  bool isPrimeField() const noexcept { return !base_; }
  const FieldPtr& base() const noexcept { return base_; }
  /// Size of the field Frobenius is taken relative to: the base, or p itself.
  u64 baseSize() const noexcept { return base_ ? base_->size_ : p_; }
  /// Monic modulus over the base, constant term first. For a prime field the
  /// formal modulus x is reported.
  const std::vector<Code>& modulus() const noexcept { return modulus_; }
  bool contains(Code x) const noexcept { return x < size_; }

  bool sameAs(const Field& other) const noexcept {
    if (this == &other) return true;
    if (p_ != other.p_ || absDegree_ != other.absDegree_ || degree_ != other.degree_) return false;
    if (isPrimeField() != other.isPrimeField()) return false;
    if (isPrimeField()) return true;
    return modulus_ == other.modulus_ && base_->sameAs(*other.base_);
  }

  /// True when `sub` is this field or appears on its base chain.
  bool hasSubfield(const Field& sub) const noexcept {
    for (const Field* f = this; f; f = f->base_.get()) {
      if (f->sameAs(sub)) return true;
    }
    return false;
  }

  std::string describe() const {
    std::ostringstream os;
    os << "F_" << size_;
    if (base_) os << " over F_" << base_->size_;
    return os.str();
  }

  // ---- arithmetic on canonical codes -------------------------------------

  Code zero() const noexcept { return 0; }
  Code one() const noexcept { return 1; }

  Code fromInt(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    return static_cast<Code>(((v % p) + p) % p);
  }

  Code add(Code a, Code b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (!base_) {
      Code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    Code r = 0, place = 1;
    for (unsigned i = 0; i < absDegree_ && (a | b); ++i) {
      Code s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      r += s * place;
      place *= p_;
      a /= p_;
      b /= p_;
    }
    return r;
  }

  Code neg(Code a) const noexcept {
    if (p_ == 2) return a;
    if (!base_) return a == 0 ? 0 : p_ - a;
    Code r = 0, place = 1;
    for (unsigned i = 0; i < absDegree_ && a; ++i) {
      Code d = a % p_;
      r += (d == 0 ? 0 : p_ - d) * place;
      place *= p_;
      a /= p_;
    }
    return r;
  }

  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

  Code mul(Code a, Code b) const {
    if (!base_) return a * b % p_;
    if (a == 0 || b == 0) return 0;
    if (const Tables* t = tables()) return t->exp[t->log[a] + t->log[b]];
    return mulSlow(a, b);
  }

  Code sqr(Code a) const { return mul(a, a); }

  Code pow(Code a, u64 e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (base_) {
      if (const Tables* t = tables()) return t->exp[mulMod(t->log[a], e % (size_ - 1), size_ - 1)];
    }
    return powGeneric(a, e % (size_ - 1) == 0 ? size_ - 1 : e % (size_ - 1));
  }

  Code inv(Code a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (!base_) return powMod(a, p_ - 2, p_);
    if (const Tables* t = tables()) return t->exp[(size_ - 1 - t->log[a]) % (size_ - 1)];
    return powGeneric(a, size_ - 2);
  }

  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  /// x^(q^i) with q = baseSize().
  Code frobenius(Code a, u64 i = 1) const {
    if (a == 0 || size_ == 2) return a;
    return pow(a, powMod(baseSize(), i, size_ - 1));
  }

  /// x^(p^i), the absolute Frobenius.
  Code frobeniusP(Code a, u64 i = 1) const {
    if (a == 0 || size_ == 2) return a;
    return pow(a, powMod(p_, i, size_ - 1));
  }

  /// Discrete logarithm base primitiveElement(); only for tabled fields.
  std::optional<u64> log(Code a) const {
    if (a == 0) return std::nullopt;
    if (const Tables* t = tables()) return t->log[a];
    return std::nullopt;
  }

  bool hasTables() const noexcept { return base_ && size_ <= kTableLimit; }

  // ---- coordinates -----------------------------------------------------

  /// Coordinates over the immediate base: degree() codes of base elements.
  std::vector<Code> toBaseCoeffs(Code a) const {
    if (!base_) return {a};
    std::vector<Code> out(degree_);
    const u64 q = base_->size_;
    for (unsigned i = 0; i < degree_; ++i) {
      out[i] = a % q;
      a /= q;
    }
    return out;
  }

  Code fromBaseCoeffs(std::span<const Code> c) const {
    if (!base_) {
      if (c.size() != 1 || c[0] >= p_) throw Error(Errc::InvalidArgument, "bad prime-field coordinate");
      return c[0];
    }
    if (c.size() != degree_) throw Error(Errc::InvalidArgument, "coordinate vector has wrong length");
    Code r = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= base_->size_) throw Error(Errc::InvalidArgument, "coordinate outside base field");
      r = r * base_->size_ + c[i];
    }
    return r;
  }

  /// Flat F_p digits, absDegree() of them.
  std::vector<std::uint32_t> digits(Code a) const {
    std::vector<std::uint32_t> out(absDegree_);
    for (unsigned i = 0; i < absDegree_; ++i) {
      out[i] = static_cast<std::uint32_t>(a % p_);
      a /= p_;
    }
    return out;
  }

  Code fromDigits(std::span<const std::uint32_t> d) const {
    if (d.size() != absDegree_) throw Error(Errc::InvalidArgument, "digit vector has wrong length");
    Code r = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (d[i] >= p_) throw Error(Errc::InvalidArgument, "digit outside prime field");
      r = r * p_ + d[i];
    }
    return r;
  }

  /// Encoding-least element of multiplicative order size()-1.
  Code primitiveElement() const {
    std::call_once(primitiveOnce_, [this] { primitive_ = findPrimitive(); });
    return primitive_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // length 2(N-1), doubled to skip a reduction
    std::vector<std::uint32_t> log;  // length N, log[0] unused
  };

  const Tables* tables() const {
    if (!hasTables()) return nullptr;
    std::call_once(tableOnce_, [this] { buildTables(); });
    return &tables_;
  }

  void buildTables() const {
    const Code g = primitiveElement();
    const u64 order = size_ - 1;
    tables_.exp.resize(2 * order);
    tables_.log.assign(size_, 0);
    Code x = 1;
    for (u64 i = 0; i < order; ++i) {
      tables_.exp[i] = static_cast<std::uint32_t>(x);
      tables_.log[x] = static_cast<std::uint32_t>(i);
      x = mulSlow(x, g);
    }
    for (u64 i = 0; i < order; ++i) tables_.exp[order + i] = tables_.exp[i];
  }

  Code findPrimitive() const {
    if (size_ == 2) return 1;
    const u64 order = size_ - 1;
    const auto primes = primeDivisors(order);
    for (Code c = 2; c < size_; ++c) {
      bool generator = true;
      for (u64 r : primes) {
        if (powGeneric(c, order / r) == 1) {
          generator = false;
          break;
        }
      }
      if (generator) return c;
    }
    throw Error(Errc::InvalidArgument, "no primitive element found");
  }

  Code mulRaw(Code a, Code b) const { return base_ ? mulSlow(a, b) : a * b % p_; }

  /// Square-and-multiply that never touches the tables (used to build them).
  Code powGeneric(Code a, u64 e) const {
    Code result = 1;
    const bool tabled = base_ && hasTables();
    while (e) {
      if (e & 1) result = tabled ? mulRaw(result, a) : mul(result, a);
      e >>= 1;
      if (e) a = tabled ? mulRaw(a, a) : mul(a, a);
    }
    return result;
  }

  Code mulSlow(Code a, Code b) const {
    const Field& B = *base_;
    const u64 q = B.size_;
    const unsigned d = degree_;
    std::array<Code, 128> ca{}, cb{}, prod{};
    for (unsigned i = 0; i < d; ++i) {
      ca[i] = a % q;
      a /= q;
      cb[i] = b % q;
      b /= q;
    }
    for (unsigned i = 0; i < d; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < d; ++j) {
        if (cb[j] == 0) continue;
        prod[i + j] = B.add(prod[i + j], B.mul(ca[i], cb[j]));
      }
    }
    for (unsigned k = 2 * d - 2; k >= d; --k) {
      const Code c = prod[k];
      if (c == 0) continue;
      for (unsigned j = 0; j < d; ++j) {
        if (modulus_[j] != 0) prod[k - d + j] = B.sub(prod[k - d + j], B.mul(c, modulus_[j]));
      }
    }
    Code r = 0;
    for (unsigned i = d; i-- > 0;) r = r * q + prod[i];
    return r;
  }

  u64 p_;
  unsigned degree_;
  unsigned absDegree_;
  u64 size_;
  FieldPtr base_;
  std::vector<Code> modulus_;

  mutable std::once_flag tableOnce_;
  mutable Tables tables_;
  mutable std::once_flag primitiveOnce_;
  mutable Code primitive_ = 1;
};

inline void requireSameField(const Field& a, const Field& b) {
  if (!a.sameAs(b)) throw Error(Errc::ContextMismatch, a.describe() + " vs " + b.describe());
}

/// A field element bound to its context. Arithmetic checks contexts.
class FqElem {
 public:
  FqElem() = default;
  FqElem(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
    if (!field_) throw Error(Errc::InvalidArgument, "element without field");
    if (!field_->contains(code_)) throw Error(Errc::InvalidArgument, "code outside field");
  }

  static FqElem zero(FieldPtr f) { return {std::move(f), 0}; }
  static FqElem one(FieldPtr f) { return {std::move(f), 1}; }
  static FqElem fromInt(FieldPtr f, std::int64_t v) {
    Code c = f->fromInt(v);
    return {std::move(f), c};
  }

  const FieldPtr& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  bool isZero() const noexcept { return code_ == 0; }
  bool isOne() const noexcept { return code_ == 1; }

  FqElem pow(u64 e) const { return {field_, field_->pow(code_, e)}; }
  FqElem inv() const { return {field_, field_->inv(code_)}; }
  FqElem frobenius(u64 i = 1) const { return {field_, field_->frobenius(code_, i)}; }
  FqElem operator-() const { return {field_, field_->neg(code_)}; }

  friend FqElem operator+(const FqElem& a, const FqElem& b) {
    requireSameField(*a.field_, *b.field_);
    return {a.field_, a.field_->add(a.code_, b.code_)};
  }
  friend FqElem operator-(const FqElem& a, const FqElem& b) {
    requireSameField(*a.field_, *b.field_);
    return {a.field_, a.field_->sub(a.code_, b.code_)};
  }
  friend FqElem operator*(const FqElem& a, const FqElem& b) {
    requireSameField(*a.field_, *b.field_);
    return {a.field_, a.field_->mul(a.code_, b.code_)};
  }
  friend FqElem operator/(const FqElem& a, const FqElem& b) {
    requireSameField(*a.field_, *b.field_);
    return {a.field_, a.field_->div(a.code_, b.code_)};
  }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    if (!a.field_ || !b.field_) return a.field_ == b.field_ && a.code_ == b.code_;
    return a.code_ == b.code_ && a.field_->sameAs(*b.field_);
  }
  friend bool operator<(const FqElem& a, const FqElem& b) { return a.code_ < b.code_; }

 private:
  FieldPtr field_;
  Code code_ = 0;
};

}  // namespace cppforge::gf
