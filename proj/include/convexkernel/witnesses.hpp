#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convexkernel/linear.hpp"

namespace ck {

// A constructed point together with the dichotomy branches that produced it.
// The point's coordinates are genuine constructive reals, valid at every
// precision; achieved_precision records the index at which branch_trace was
// observed (per-precision branches are deterministic for fixed inputs).
struct WitnessPoint {
  Vector point;
  int achieved_precision = 0;
  std::vector<DichotomyVerdict> branch_trace;
};

// Witness of linear dependence lambda*x = mu*y with a rational lower bound
// on |lambda| or |mu| marking the nondegenerate coefficient.
struct DependenceWitness {
  CReal lambda;
  CReal mu;
  enum class Bounded { Lambda, Mu } bounded = Bounded::Lambda;
  Rational lower_bound;
  std::string relation = "lambda*x = mu*y";
};

using MetricOracle =
    std::function<WitnessPoint(const Vector&, const Vector&, const CReal&, const CReal&, NormKind)>;

// Exact intermediate point: requires lambda >= 0, mu >= 0 and
// lambda + mu = ||x - y|| as reals (caller contract; violations surface as
// modulus violations in the output stream). Returns z with ||z - x|| = lambda
// and ||z - y|| = mu exactly.
//
// Each coordinate approximation at precision k decides rho = ||x - y||
// against 2^-(k+2): on Pos it evaluates w = (mu*x + lambda*y)/rho using the
// rational lower bound 2^-(k+4) certified by the verdict; otherwise it
// returns x's approximation, which is within 2^-(k+1) of z because
// ||z - x|| = lambda <= rho < 2^-(k+2).
WitnessPoint metric_point(const Vector& x, const Vector& y, const CReal& lambda,
                          const CReal& mu, NormKind kind, int trace_precision = 32);

// Approximate intermediate point: requires lambda > 0, mu > 0 and
// rho(x,y) < lambda + mu, with the single rational margin certifying
//   lambda >= margin, mu >= margin, lambda + mu - rho(x,y) >= 4*margin.
// Case analysis on gamma = lambda + mu - rho via dichotomy (gap 2*margin),
// then delegation to the metric oracle with (lambda', mu') summing to rho.
// The branch rule guarantees rho(x,z) <= lambda - margin/4 and
// rho(z,y) <= mu - margin/4.
WitnessPoint near_convex_point(const Vector& x, const Vector& y, const CReal& lambda,
                               const CReal& mu, NormKind kind, const Rational& margin,
                               const MetricOracle& oracle = {});

// Common point of osculating balls (||c1 - c2|| = r1 + r2, caller contract).
// With a positive rational lower bound on r1 + r2, returns the closed form
// z = (r2*c1 + r1*c2)/(r1 + r2); otherwise delegates to metric_point, which
// remains total even when the radii sum cannot be bounded away from zero.
WitnessPoint osculation_common_point(const Ball& b1, const Ball& b2,
                                     std::optional<Rational> positivity = std::nullopt,
                                     int trace_precision = 32);

// Checks |  ||v - c_i|| - r_i  | <= 2^-(k+1) for both balls.
bool osculation_boundary_check(const Vector& v, const Ball& b1, const Ball& b2, int k);

// Hull points of two common points of osculating balls are common points.
Vector hull_common_points(const Vector& u, const Vector& v, const Ball& b1, const Ball& b2,
                          const CReal& t);

// The unique common point of osculating unit balls in the strictly convex
// (P2) case: (c1 + c2)/2. Preconditions ||c1 - c2|| = 2 and P2 are the
// caller's contract.
Vector unique_point_strict(const Vector& c1, const Vector& c2);

// For P2 vectors with ||x + y|| = ||x|| + ||y|| bounded below by
// norm_sum_bound > 0: the balls B_{||x||}(x) and B_{||y||}(-y) osculate,
// their common points 0 and (||y||x - ||x||y)/(||x||+||y||) coincide by
// strict convexity, so ||y||*x = ||x||*y. Returns (lambda, mu) =
// (||y||, ||x||) with the nondegenerate side decided by pos_or_small at gap
// norm_sum_bound/2.
DependenceWitness linear_dependence_witness(const Vector& x, const Vector& y,
                                            const Rational& norm_sum_bound);

}  // namespace ck
