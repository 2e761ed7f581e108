#include "convexkernel/rational.hpp"

#include <cctype>

#include "convexkernel/error.hpp"

namespace ck {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw Error(ErrorCode::InvalidArgument, "rational division by zero");
  v_ /= o.v_;
  v_.canonicalize();
  return *this;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
  }
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!valid_int(num) || !valid_int(den))
    throw Error(ErrorCode::ParseError, "malformed rational literal: " + std::string(text));
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "rational with zero denominator: " + std::string(text));
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::pow2(int e) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(mpq_class(p));
  mpq_class q(1, p);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

int ceil_log2_geq1(const Rational& r) {
  if (r.sign() <= 0) return 0;
  mpz_class p = r.numerator(), q = r.denominator();
  // start below the answer, then walk up (at most a couple of steps)
  long n = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 1;
  if (n < 0) n = 0;
  mpz_class lhs;
  mpz_mul_2exp(lhs.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
  while (lhs < p) {
    lhs *= 2;
    ++n;
  }
  return static_cast<int>(n);
}

int prec_for_bound(const Rational& bound) {
  if (bound.sign() <= 0)
    throw Error(ErrorCode::InvalidArgument, "precision bound must be positive");
  return ceil_log2_geq1(Rational(1) / bound);
}

namespace {

// floor(sqrt(floor(t * 4^m))), as an integer
mpz_class scaled_isqrt(const Rational& t, int m) {
  if (t.sign() < 0) throw Error(ErrorCode::InvalidArgument, "square root of negative rational");
  mpz_class num = t.numerator();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(2 * m));
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), t.denominator().get_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return root;
}

}  // namespace

Rational dyadic_sqrt_floor(const Rational& t, int m) {
  mpq_class q(scaled_isqrt(t, m), Rational::pow2(m).numerator());
  q.canonicalize();
  return Rational(std::move(q));
}

Rational dyadic_sqrt_upper(const Rational& t, int m) {
  mpq_class q(scaled_isqrt(t, m) + 1, Rational::pow2(m).numerator());
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace ck
