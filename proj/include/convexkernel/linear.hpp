#pragma once

#include <initializer_list>
#include <vector>

#include "convexkernel/creal.hpp"

namespace ck {

// Concrete norm family on R^d. P2 is the uniformly convex instance backing
// the modulus machinery; P1 and PInf exist to exhibit the failure of strict
// convexity.
enum class NormKind { P1, P2, PInf };

const char* to_string(NormKind k);
NormKind norm_kind_from_string(const std::string& s);  // "p1" | "p2" | "pinf"

// Point of R^d with constructive-real coordinates, d >= 1.
class Vector {
 public:
  explicit Vector(std::vector<CReal> coords);
  Vector(std::initializer_list<CReal> coords) : Vector(std::vector<CReal>(coords)) {}

  static Vector from_rationals(const std::vector<Rational>& coords);
  static Vector zero(int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  const CReal& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<CReal>& coords() const { return coords_; }

 private:
  std::vector<CReal> coords_;
};

void require_same_dim(const Vector& x, const Vector& y);

Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector scale(const CReal& s, const Vector& x);
Vector scale(const Rational& s, const Vector& x);

// Coordinatewise (u + v)/2.
Vector midpoint(const Vector& u, const Vector& v);

// sqrt for nonnegative reals, total without a positive lower bound: the
// approximation at k queries the radicand at 2k+2 and uses
// |sqrt(a) - sqrt(b)| <= sqrt(|a - b|) to keep the dyadic modulus.
CReal sqrt_nonneg(const CReal& s);

CReal norm(const Vector& x, NormKind kind);
CReal distance(const Vector& x, const Vector& y, NormKind kind);

// Convex hull of a pair of points; its points are (1-t)u + tv, 0 <= t <= 1.
struct Segment {
  Segment(Vector u_, Vector v_);
  Vector u;
  Vector v;
};

// (1-t)u + tv. The bound 0 <= t <= 1 is the caller's contract.
Vector hull_point(const Segment& seg, const CReal& t);

// Closed ball; the radius is clamped to max(radius, 0) at construction.
struct Ball {
  Ball(Vector center_, CReal radius_, NormKind kind_);
  Vector center;
  CReal radius;
  NormKind kind;
};

// Exact membership on the boundary is undecidable; membership is decided at
// a caller tolerance with sound three-way semantics:
//   Inside  => ||p - c|| < r + tol
//   Outside => ||p - c|| > r - tol
//   BoundaryIndeterminate => | ||p - c|| - r | <= tol
enum class BallSide { Inside, Outside, BoundaryIndeterminate };

const char* to_string(BallSide s);

BallSide in_ball(const Vector& p, const Ball& b, const Rational& tol);

}  // namespace ck
