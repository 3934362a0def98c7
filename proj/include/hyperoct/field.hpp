#pragma once

// Coefficient fields: prime fields GF(p) and the rationals.
//
// Every field type F exposes
//   using Elem;            element type with + - * / == and is_zero()
//   zero(), one(), from_int(int64_t), from_string(std::string_view)
//   characteristic()       0 for Q
//   random(Rng&)           uniformly random element (small integers for Q)
// Elements carry enough context to do arithmetic on their own.

#include <cassert>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperoct {

using Rng = std::mt19937_64;

// Portable bounded draw; std::uniform_int_distribution differs across
// standard libraries, which would break seed reproducibility.
inline uint64_t draw_below(Rng& rng, uint64_t bound) { return rng() % bound; }

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

bool is_prime_u32(uint32_t p);

inline constexpr uint32_t kDefaultPrime = 65521;

class Fp {
 public:
  Fp() = default;
  Fp(uint32_t value, uint32_t p) : v_(value), p_(p) {}

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp b) const {
    assert(p_ == b.p_);
    uint32_t s = v_ + b.v_;
    return {s >= p_ ? s - p_ : s, p_};
  }
  Fp operator-(Fp b) const {
    assert(p_ == b.p_);
    return {v_ >= b.v_ ? v_ - b.v_ : v_ + p_ - b.v_, p_};
  }
  Fp operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
  Fp operator*(Fp b) const {
    assert(p_ == b.p_);
    return {static_cast<uint32_t>(static_cast<uint64_t>(v_) * b.v_ % p_), p_};
  }
  Fp inv() const {
    if (v_ == 0) throw DivisionByZero();
    int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
      int64_t q = a / m;
      int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    x0 %= static_cast<int64_t>(p_);
    if (x0 < 0) x0 += p_;
    return {static_cast<uint32_t>(x0), p_};
  }
  Fp operator/(Fp b) const { return *this * b.inv(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  bool operator==(const Fp& b) const { return v_ == b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  uint32_t v_ = 0;
  uint32_t p_ = 0;
};

class PrimeField {
 public:
  using Elem = Fp;

  explicit PrimeField(uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 3 || !is_prime_u32(p)) throw std::invalid_argument("modulus must be an odd prime: " + std::to_string(p));
  }

  uint32_t modulus() const { return p_; }
  uint64_t characteristic() const { return p_; }
  Elem zero() const { return {0, p_}; }
  Elem one() const { return {1, p_}; }
  Elem from_int(int64_t a) const {
    int64_t r = a % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<uint32_t>(r), p_};
  }
  Elem from_mpz(const mpz_class& a) const {
    mpz_class r = a % p_;
    if (r < 0) r += p_;
    return {static_cast<uint32_t>(r.get_ui()), p_};
  }
  // Accepts "a" or "a/b" with arbitrary-size decimal integers.
  Elem from_string(std::string_view s) const;
  Elem random(Rng& rng) const { return {static_cast<uint32_t>(draw_below(rng, p_)), p_}; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }

  Rational operator+(const Rational& b) const { return Rational(mpq_class(q_ + b.q_)); }
  Rational operator-(const Rational& b) const { return Rational(mpq_class(q_ - b.q_)); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator*(const Rational& b) const { return Rational(mpq_class(q_ * b.q_)); }
  Rational inv() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / q_));
  }
  Rational operator/(const Rational& b) const {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(q_ / b.q_));
  }
  Rational& operator+=(const Rational& b) {
    q_ += b.q_;
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    q_ -= b.q_;
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    q_ *= b.q_;
    return *this;
  }
  bool operator==(const Rational& b) const { return q_ == b.q_; }

  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

class RationalField {
 public:
  using Elem = Rational;

  uint64_t characteristic() const { return 0; }
  Elem zero() const { return {}; }
  Elem one() const { return Rational(mpq_class(1)); }
  Elem from_int(int64_t a) const { return Rational(mpq_class(static_cast<long>(a))); }
  Elem from_mpz(const mpz_class& a) const { return Rational(mpq_class(a)); }
  Elem from_string(std::string_view s) const;
  // Nonzero integers in [-9, 9].
  Elem random(Rng& rng) const {
    int64_t a = static_cast<int64_t>(draw_below(rng, 18)) - 9;
    return from_int(a >= 0 ? a + 1 : a);
  }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

mpz_class parse_integer(std::string_view s);

inline Fp PrimeField::from_string(std::string_view s) const {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return from_mpz(parse_integer(s));
  Fp den = from_mpz(parse_integer(s.substr(slash + 1)));
  if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return from_mpz(parse_integer(s.substr(0, slash))) / den;
}

inline Rational RationalField::from_string(std::string_view s) const {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return from_mpz(parse_integer(s));
  mpz_class den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(mpq_class(parse_integer(s.substr(0, slash)), den));
}

template <class E>
E pow(E base, uint64_t e, E one) {
  E r = one;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace hyperoct
