#include "convexkernel/moduli.hpp"

#include <algorithm>

namespace ck {

const char* to_string(ModulusSource s) {
  switch (s) {
    case ModulusSource::BaseEuclidean: return "BaseEuclidean";
    case ModulusSource::Lemma1Extended: return "Lemma1Extended";
    case ModulusSource::Lemma3Delta: return "Lemma3Delta";
  }
  return "?";
}

std::optional<Rational> ModulusCertificate::param(const std::string& name) const {
  for (const auto& [n, v] : params)
    if (n == name) return v;
  return std::nullopt;
}

ModulusCertificate base_modulus_euclidean(const Rational& eps) {
  if (eps.sign() <= 0 || eps > Rational(2))
    throw Error(ErrorCode::InvalidArgument, "base modulus requires 0 < eps <= 2");
  Rational target = Rational(1) - eps * eps / Rational(4);
  // Upper-bound grid fine enough that q < 1 survives: the bound error is at
  // most 2^-m <= eps^2/16, and sqrt(1 - eps^2/4) <= 1 - eps^2/8.
  int m = std::max(40, 4 + 2 * prec_for_bound(eps));
  Rational q = dyadic_sqrt_upper(target, m);
  ModulusCertificate cert;
  cert.epsilon = eps;
  cert.q = q;
  cert.delta = Rational(1) - q;
  cert.source = ModulusSource::BaseEuclidean;
  return cert;
}

BaseModulus euclidean_base() {
  return [](const Rational& eps) { return base_modulus_euclidean(eps); };
}

ModulusCertificate extended_modulus(const Rational& eps, const BaseModulus& base) {
  if (eps.sign() <= 0)
    throw Error(ErrorCode::InvalidArgument, "extended modulus requires eps > 0");
  Rational eps_prime = min(eps / Rational(2), Rational(2));
  Rational q_prime = base(eps_prime).q;
  Rational delta = min(min(eps / Rational(12), (Rational(1) - q_prime) / Rational(4)),
                       Rational(1, 3));
  ModulusCertificate cert;
  cert.epsilon = eps;
  cert.q = Rational(1) - delta;
  cert.delta = delta;
  cert.source = ModulusSource::Lemma1Extended;
  cert.params = {{"epsprime", eps_prime}, {"qprime", q_prime}};
  return cert;
}

const char* to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Satisfied: return "Satisfied";
    case CheckOutcome::Violated: return "Violated";
    case CheckOutcome::PremiseNotMet: return "PremiseNotMet";
  }
  return "?";
}

const char* to_string(LensBranch b) {
  switch (b) {
    case LensBranch::SmallCenters: return "SmallCenters";
    case LensBranch::PositiveDistance: return "PositiveDistance";
  }
  return "?";
}

CheckOutcome midpoint_bound_check(const Vector& c, const CReal& r, const Vector& u,
                                  const Vector& v, const ModulusCertificate& cert, int k) {
  require_same_dim(c, u);
  require_same_dim(c, v);
  const int j = k + 2;
  const Rational slack = Rational::pow2(-k);
  const Rational approx_err = Rational::pow2(-j);

  // premises, each as "quantity <= 0 up to slack 2^-k"
  CReal member_u = distance(u, c, NormKind::P2) - r;
  CReal member_v = distance(v, c, NormKind::P2) - r;
  CReal separation = scale(cert.epsilon, r) - distance(u, v, NormKind::P2);
  for (const CReal& premise : {member_u, member_v, separation}) {
    if (premise.approx(j) + approx_err > slack) return CheckOutcome::PremiseNotMet;
  }

  // conclusion certified violated only with margin: true gap > 2^-k
  CReal conclusion = distance(midpoint(u, v), c, NormKind::P2) - scale(cert.q, r);
  if (conclusion.approx(j) - approx_err > slack) return CheckOutcome::Violated;
  return CheckOutcome::Satisfied;
}

LensDelta intersection_delta(const Rational& eps, const Vector& c, const Vector& d,
                             const BaseModulus& base, NormKind kind) {
  if (eps.sign() <= 0)
    throw Error(ErrorCode::InvalidArgument, "intersection_delta requires eps > 0");
  require_same_dim(c, d);
  CReal rho = distance(c, d, kind);

  LensDelta out;
  out.epsilon = eps;
  DichotomyVerdict verdict = pos_or_small(rho, eps / Rational(4));
  if (verdict == DichotomyVerdict::SmallerThanE) {
    // rho < eps/4: if |r+s-rho| < delta then r <= rho + delta < eps/2, so
    // the whole ball B_r(c) has diameter < eps
    out.branch = LensBranch::SmallCenters;
    out.delta = eps / Rational(4);
    return out;
  }

  // Pos guarantees rho > eps/16. Re-query at the precision pos_or_small used
  // (deterministic, same approximant) for two-sided rational bounds.
  int k0 = prec_for_bound(eps / Rational(16));
  Rational rho_approx = rho.approx(k0);
  Rational rho_upper = rho_approx + Rational::pow2(-k0);
  Rational rho_lower = max(eps / Rational(16), rho_approx - Rational::pow2(-k0));

  // A smaller modulus argument eps/rho_upper <= eps/rho strengthens the
  // premise the certificate covers; a smaller rho_lower shrinks delta. Both
  // substitutions are in the conservative direction.
  ModulusCertificate ball_cert = extended_modulus(eps / rho_upper, base);
  out.branch = LensBranch::PositiveDistance;
  out.delta = min(eps / Rational(4), rho_lower * (Rational(1) - ball_cert.q));
  out.rho_lower = rho_lower;
  out.rho_upper = rho_upper;
  out.ball_modulus = std::move(ball_cert);
  return out;
}

DiameterReport diameter_bound_check(const Ball& b1, const Ball& b2, const Rational& eps,
                                    const Rational& delta,
                                    const std::vector<std::pair<Vector, Vector>>& samples,
                                    int k) {
  require_same_dim(b1.center, b2.center);
  if (b1.kind != b2.kind)
    throw Error(ErrorCode::NormKindMismatch, "balls with different norm kinds");
  DiameterReport report;
  report.worst_distance = Rational(0);

  const Rational tol = Rational::pow2(-k);
  CReal osc_gap = b1.radius + b2.radius - distance(b1.center, b2.center, b1.kind);
  Rational gap = osc_gap.approx(k + 2);
  report.premise_met = abs(gap) < delta + Rational::pow2(-(k + 2));
  if (!report.premise_met) {
    report.skipped = samples.size();
    return report;  // out of the guarantee's scope: vacuous pass
  }

  for (const auto& [u, v] : samples) {
    bool member = in_ball(u, b1, tol) != BallSide::Outside &&
                  in_ball(u, b2, tol) != BallSide::Outside &&
                  in_ball(v, b1, tol) != BallSide::Outside &&
                  in_ball(v, b2, tol) != BallSide::Outside;
    if (!member) {
      ++report.skipped;
      continue;
    }
    ++report.admitted;
    Rational dist = distance(u, v, b1.kind).approx(k + 2);
    report.worst_distance = max(report.worst_distance, dist);
    if (dist > eps + tol) report.pass = false;
  }
  return report;
}

}  // namespace ck
