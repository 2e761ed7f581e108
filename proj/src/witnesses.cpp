#include "convexkernel/witnesses.hpp"

namespace ck {

WitnessPoint metric_point(const Vector& x, const Vector& y, const CReal& lambda,
                          const CReal& mu, NormKind kind, int trace_precision) {
  require_same_dim(x, y);
  CReal rho = distance(x, y, kind);

  std::vector<CReal> coords;
  coords.reserve(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    CReal xi = x[i];
    CReal yi = y[i];
    coords.push_back(CReal::from_fn([rho, lambda, mu, xi, yi](int k) {
      Rational e = Rational::pow2(-(k + 2));
      if (pos_or_small(rho, e) == DichotomyVerdict::Pos) {
        CReal w = div_pos(mu * xi + lambda * yi, rho, e / Rational(4));
        return w.approx(k);
      }
      // rho < 2^-(k+2), and ||z - x|| = lambda <= rho
      return xi.approx(k + 2);
    }));
  }

  WitnessPoint out{Vector(std::move(coords)), trace_precision, {}};
  out.branch_trace.push_back(pos_or_small(rho, Rational::pow2(-(trace_precision + 2))));
  return out;
}

WitnessPoint near_convex_point(const Vector& x, const Vector& y, const CReal& lambda,
                               const CReal& mu, NormKind kind, const Rational& margin,
                               const MetricOracle& oracle) {
  if (margin.sign() <= 0)
    throw Error(ErrorCode::InvalidArgument, "near_convex_point requires a positive margin");
  require_same_dim(x, y);

  CReal rho = distance(x, y, kind);
  CReal gamma = lambda + mu - rho;
  CReal half_gamma = scale(Rational(1, 2), gamma);
  Rational gap = Rational(2) * margin;  // gamma >= 4*margin makes this a valid witness

  std::vector<DichotomyVerdict> trace;
  CReal lambda_prime, mu_prime;
  DichotomyVerdict on_lambda = dichotomy(half_gamma, gamma, gap, lambda);
  trace.push_back(on_lambda);
  if (on_lambda == DichotomyVerdict::GammaLtBeta) {
    // lambda < gamma: lambda' = 0, mu' = mu + lambda - gamma = rho
    lambda_prime = CReal();
    mu_prime = rho;
  } else {
    DichotomyVerdict on_mu = dichotomy(half_gamma, gamma, gap, mu);
    trace.push_back(on_mu);
    if (on_mu == DichotomyVerdict::GammaLtBeta) {
      // mu < gamma: mu' = 0, lambda' = rho
      lambda_prime = rho;
      mu_prime = CReal();
    } else {
      // lambda > gamma/2 and mu > gamma/2
      lambda_prime = lambda - half_gamma;
      mu_prime = mu - half_gamma;
    }
  }

  WitnessPoint out =
      oracle ? oracle(x, y, lambda_prime, mu_prime, kind)
             : metric_point(x, y, lambda_prime, mu_prime, kind);
  out.branch_trace.insert(out.branch_trace.begin(), trace.begin(), trace.end());
  return out;
}

WitnessPoint osculation_common_point(const Ball& b1, const Ball& b2,
                                     std::optional<Rational> positivity, int trace_precision) {
  if (b1.kind != b2.kind)
    throw Error(ErrorCode::NormKindMismatch, "osculating balls must share a norm kind");
  require_same_dim(b1.center, b2.center);
  if (positivity && positivity->sign() < 0)
    throw Error(ErrorCode::InvalidArgument, "claimed positivity bound is negative");

  if (positivity && positivity->sign() > 0) {
    CReal radius_sum = b1.radius + b2.radius;
    std::vector<CReal> coords;
    coords.reserve(static_cast<std::size_t>(b1.center.dim()));
    for (int i = 0; i < b1.center.dim(); ++i) {
      CReal numerator = b2.radius * b1.center[i] + b1.radius * b2.center[i];
      coords.push_back(div_pos(numerator, radius_sum, *positivity));
    }
    return WitnessPoint{Vector(std::move(coords)), trace_precision, {}};
  }
  return metric_point(b1.center, b2.center, b1.radius, b2.radius, b1.kind, trace_precision);
}

bool osculation_boundary_check(const Vector& v, const Ball& b1, const Ball& b2, int k) {
  const Rational bound = Rational::pow2(-k);
  for (const Ball& b : {b1, b2}) {
    require_same_dim(v, b.center);
    CReal gap = distance(v, b.center, b.kind) - b.radius;
    if (abs(gap.approx(k)) > bound) return false;
  }
  return true;
}

Vector hull_common_points(const Vector& u, const Vector& v, const Ball& b1, const Ball& b2,
                          const CReal& t) {
  if (b1.kind != b2.kind)
    throw Error(ErrorCode::NormKindMismatch, "osculating balls must share a norm kind");
  require_same_dim(u, b1.center);
  require_same_dim(v, b2.center);
  return hull_point(Segment(u, v), t);
}

Vector unique_point_strict(const Vector& c1, const Vector& c2) {
  return midpoint(c1, c2);
}

DependenceWitness linear_dependence_witness(const Vector& x, const Vector& y,
                                            const Rational& norm_sum_bound) {
  if (norm_sum_bound.sign() <= 0)
    throw Error(ErrorCode::InvalidArgument, "norm_sum_bound must be positive");
  require_same_dim(x, y);
  CReal nx = norm(x, NormKind::P2);
  CReal ny = norm(y, NormKind::P2);

  DependenceWitness out;
  out.lambda = ny;
  out.mu = nx;
  // ||x|| + ||y|| >= bound, so either ||x|| > bound/8 or ||y|| > bound/2
  if (pos_or_small(nx, norm_sum_bound / Rational(2)) == DichotomyVerdict::Pos) {
    out.bounded = DependenceWitness::Bounded::Mu;
    out.lower_bound = norm_sum_bound / Rational(8);
  } else {
    out.bounded = DependenceWitness::Bounded::Lambda;
    out.lower_bound = norm_sum_bound / Rational(2);
  }
  return out;
}

}  // namespace ck
