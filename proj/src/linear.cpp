#include "convexkernel/linear.hpp"

#include <string>

namespace ck {

const char* to_string(NormKind k) {
  switch (k) {
    case NormKind::P1: return "p1";
    case NormKind::P2: return "p2";
    case NormKind::PInf: return "pinf";
  }
  return "?";
}

NormKind norm_kind_from_string(const std::string& s) {
  if (s == "p1") return NormKind::P1;
  if (s == "p2") return NormKind::P2;
  if (s == "pinf") return NormKind::PInf;
  throw Error(ErrorCode::ParseError, "unknown norm kind: " + s);
}

Vector::Vector(std::vector<CReal> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::InvalidArgument, "vector must have dimension >= 1");
}

Vector Vector::from_rationals(const std::vector<Rational>& coords) {
  std::vector<CReal> c;
  c.reserve(coords.size());
  for (const auto& q : coords) c.push_back(CReal::from_rational(q));
  return Vector(std::move(c));
}

Vector Vector::zero(int dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "vector must have dimension >= 1");
  return Vector(std::vector<CReal>(static_cast<std::size_t>(dim)));
}

void require_same_dim(const Vector& x, const Vector& y) {
  if (x.dim() != y.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                    std::to_string(y.dim()));
}

Vector operator+(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  std::vector<CReal> c;
  c.reserve(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) c.push_back(x[i] + y[i]);
  return Vector(std::move(c));
}

Vector operator-(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  std::vector<CReal> c;
  c.reserve(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) c.push_back(x[i] - y[i]);
  return Vector(std::move(c));
}

Vector scale(const CReal& s, const Vector& x) {
  std::vector<CReal> c;
  c.reserve(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) c.push_back(s * x[i]);
  return Vector(std::move(c));
}

Vector scale(const Rational& s, const Vector& x) {
  std::vector<CReal> c;
  c.reserve(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) c.push_back(scale(s, x[i]));
  return Vector(std::move(c));
}

Vector midpoint(const Vector& u, const Vector& v) {
  return scale(Rational(1, 2), u + v);
}

CReal sqrt_nonneg(const CReal& s) {
  return CReal::from_fn([s](int k) {
    // |sqrt(t) - sqrt(s)| <= sqrt(|t - s|) <= 2^-(k+1), then a dyadic
    // approximant of sqrt(t) at 2^-(k+1); total error <= 2^-k
    Rational t = max(s.approx(2 * k + 2), Rational(0));
    return dyadic_sqrt_floor(t, k + 1);
  });
}

CReal norm(const Vector& x, NormKind kind) {
  switch (kind) {
    case NormKind::P1: {
      CReal acc = abs(x[0]);
      for (int i = 1; i < x.dim(); ++i) acc = acc + abs(x[i]);
      return acc;
    }
    case NormKind::PInf: {
      CReal acc = abs(x[0]);
      for (int i = 1; i < x.dim(); ++i) acc = max(acc, abs(x[i]));
      return acc;
    }
    case NormKind::P2: {
      CReal acc = x[0] * x[0];
      for (int i = 1; i < x.dim(); ++i) acc = acc + x[i] * x[i];
      return sqrt_nonneg(acc);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown norm kind");
}

CReal distance(const Vector& x, const Vector& y, NormKind kind) {
  require_same_dim(x, y);
  return norm(x - y, kind);
}

Segment::Segment(Vector u_, Vector v_) : u(std::move(u_)), v(std::move(v_)) {
  require_same_dim(u, v);
}

Vector hull_point(const Segment& seg, const CReal& t) {
  if (const Rational* tc = t.constant_value()) {
    // rational parameters take the exact path; t=0 and t=1 reproduce the
    // endpoints coordinatewise
    if (*tc == Rational(0)) return seg.u;
    if (*tc == Rational(1)) return seg.v;
    return scale(Rational(1) - *tc, seg.u) + scale(*tc, seg.v);
  }
  CReal one_minus_t = CReal::from_rational(Rational(1)) - t;
  return scale(one_minus_t, seg.u) + scale(t, seg.v);
}

Ball::Ball(Vector center_, CReal radius_, NormKind kind_)
    : center(std::move(center_)), radius(plus_part(radius_)), kind(kind_) {}

const char* to_string(BallSide s) {
  switch (s) {
    case BallSide::Inside: return "Inside";
    case BallSide::Outside: return "Outside";
    case BallSide::BoundaryIndeterminate: return "BoundaryIndeterminate";
  }
  return "?";
}

BallSide in_ball(const Vector& p, const Ball& b, const Rational& tol) {
  if (tol.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "in_ball requires tol > 0");
  require_same_dim(p, b.center);
  CReal gap = distance(p, b.center, b.kind) - b.radius;
  Rational g = gap.approx(prec_for_bound(tol / Rational(4)));
  if (g < -tol / Rational(2)) return BallSide::Inside;
  if (g > tol / Rational(2)) return BallSide::Outside;
  return BallSide::BoundaryIndeterminate;
}

}  // namespace ck
