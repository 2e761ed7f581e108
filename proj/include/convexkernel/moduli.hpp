#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convexkernel/linear.hpp"

namespace ck {

enum class ModulusSource { BaseEuclidean, Lemma1Extended, Lemma3Delta };

const char* to_string(ModulusSource s);

// Rational record tying a uniform-convexity bound to the derivation that
// produced it. The soundness statement depends on the source:
//   BaseEuclidean:  u,v unit vectors, ||u-v|| >= epsilon  =>  ||(u+v)/2|| <= q
//   Lemma1Extended: u,v in B_r(c), ||u-v|| >= r*epsilon   =>  ||(u+v)/2 - c|| <= q*r
struct ModulusCertificate {
  Rational epsilon;  // > 0
  Rational q;        // < 1
  Rational delta;    // > 0, q = 1 - delta
  ModulusSource source = ModulusSource::BaseEuclidean;
  std::vector<std::pair<std::string, Rational>> params;

  std::optional<Rational> param(const std::string& name) const;
};

using BaseModulus = std::function<ModulusCertificate(const Rational&)>;

// Euclidean (P2) modulus via the parallelogram law: if ||u||,||v|| <= 1 and
// ||u-v|| >= eps then ||(u+v)/2|| <= sqrt(1 - eps^2/4). Returns a rational
// upper bound on that root, tight to better than 2^-32 and always < 1.
// Domain: 0 < eps <= 2.
ModulusCertificate base_modulus_euclidean(const Rational& eps);

BaseModulus euclidean_base();

// Extension of the unit-ball modulus to arbitrary balls:
//   q' = base(eps/2).q, delta = min{eps/12, (1-q')/4, 1/3}, q = 1 - delta.
// The base is consulted at min(eps/2, 2): a base modulus for separation 2
// remains valid for any larger separation, which is unreachable for unit
// vectors anyway.
ModulusCertificate extended_modulus(const Rational& eps, const BaseModulus& base);

enum class CheckOutcome { Satisfied, Violated, PremiseNotMet };

const char* to_string(CheckOutcome o);

// Evaluates the extended-modulus claim on one configuration at precision k.
// Sound three-way semantics: Violated only when the premises hold up to
// slack 2^-k and the conclusion ||(u+v)/2 - c|| <= q*r fails by more than
// 2^-k with certainty; PremiseNotMet when some premise certainly fails at
// that slack.
CheckOutcome midpoint_bound_check(const Vector& c, const CReal& r, const Vector& u,
                                  const Vector& v, const ModulusCertificate& cert, int k);

enum class LensBranch { SmallCenters, PositiveDistance };

const char* to_string(LensBranch b);

// Output of intersection_delta: if |r + s - rho| < delta then
// diam(B_r(c) cap B_s(d)) <= epsilon.
struct LensDelta {
  Rational epsilon;
  Rational delta;
  LensBranch branch = LensBranch::SmallCenters;
  std::optional<Rational> rho_lower;               // PositiveDistance only
  std::optional<Rational> rho_upper;               // PositiveDistance only
  std::optional<ModulusCertificate> ball_modulus;  // PositiveDistance only
};

// Quantitative form of "diam(B_r(c) cap B_s(d)) -> 0 as r+s -> ||c-d||" for
// the uniformly convex (P2) plane/space. Decides rho = ||c-d|| against eps/4
// with pos_or_small; on the positive branch it derives rational bounds
// rho_lower <= rho <= rho_upper from the same approximation (conservative in
// the direction each is used) and sets
//   q = extended_modulus(eps/rho_upper).q, delta = min{eps/4, rho_lower*(1-q)}.
LensDelta intersection_delta(const Rational& eps, const Vector& c, const Vector& d,
                             const BaseModulus& base, NormKind kind = NormKind::P2);

struct DiameterReport {
  bool pass = true;
  bool premise_met = false;  // |r + s - rho| < delta held at tolerance
  std::size_t admitted = 0;
  std::size_t skipped = 0;  // sample pairs failing ball membership at 2^-k
  Rational worst_distance;  // max approximated pair distance over admitted pairs
};

// Executor for the lens-diameter guarantee: admits sample pairs lying in both
// balls at tolerance 2^-k and checks ||u - v|| <= eps + 2^-(k+1) for each.
// Pairs failing membership are skipped and counted, not failed.
DiameterReport diameter_bound_check(const Ball& b1, const Ball& b2, const Rational& eps,
                                    const Rational& delta,
                                    const std::vector<std::pair<Vector, Vector>>& samples,
                                    int k);

}  // namespace ck
