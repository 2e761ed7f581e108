#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ck {

// Exact fraction of two arbitrary-precision integers. Values are kept in
// canonical form at all times: lowest terms, denominator > 0. Equality is
// therefore syntactic and the "num/den" serialization is unique.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
  Rational(long n, long d);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Parses "n", "n/d", with optional leading sign. Throws ck::Error on
  // malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  // 2^e for any integer e (negative exponents give dyadic fractions).
  static Rational pow2(int e);

  std::string str() const;  // canonical "num/den"

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; v_.canonicalize(); return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

Rational abs(const Rational& a);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Smallest n >= 0 with 2^n >= r.
int ceil_log2_geq1(const Rational& r);

// Smallest k >= 0 with 2^-k <= bound. Requires bound > 0.
int prec_for_bound(const Rational& bound);

// Dyadic square-root approximants for t >= 0 at grid 2^-m:
//   floor variant f satisfies  f <= sqrt(t) < f + 2^-m
//   upper variant u satisfies  sqrt(t) <= u <= sqrt(t) + 2^-m
Rational dyadic_sqrt_floor(const Rational& t, int m);
Rational dyadic_sqrt_upper(const Rational& t, int m);

}  // namespace ck
