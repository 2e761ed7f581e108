#include "convexkernel/verify.hpp"

#include <utility>

#include "convexkernel/harness.hpp"

namespace ck {

namespace {

Rational sq(const Rational& x) { return x * x; }

std::vector<Rational> rational_coords(SampleRng& rng, int dim, const Rational& lo,
                                      const Rational& hi) {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) c.push_back(rng.dyadic_in(lo, hi, 12));
  return c;
}

std::vector<Rational> add_scaled(const std::vector<Rational>& base, const Rational& s,
                                 const std::vector<Rational>& dir) {
  std::vector<Rational> out = base;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * dir[i];
  return out;
}

Rational dist_sq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += sq(a[i] - b[i]);
  return acc;
}

}  // namespace

std::vector<Rational> default_lemma1_epsilons() {
  return {Rational(1, 4), Rational(1, 2), Rational(1), Rational(3, 2)};
}

std::vector<Rational> default_lemma3_epsilons() {
  return {Rational(1, 4), Rational(1, 2)};
}

std::vector<Rational> rational_unit_vector(SampleRng& rng, int dim) {
  auto circle = [&rng]() {
    Rational t = rng.dyadic_in(Rational(-1), Rational(1), 12);
    Rational denom = Rational(1) + t * t;
    return std::pair<Rational, Rational>{(Rational(1) - t * t) / denom,
                                         (Rational(2) * t) / denom};
  };
  switch (dim) {
    case 1:
      return {rng.coin() ? Rational(1) : Rational(-1)};
    case 2: {
      auto [c, s] = circle();
      return {c, s};
    }
    case 3: {
      auto [ct, st] = circle();
      auto [cp, sp] = circle();
      return {cp * ct, cp * st, sp};
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "rational unit vectors exist for dim 1..3 only");
  }
}

SuiteReport lemma1_soundness_sweep(std::uint64_t seed, int samples_per_cell,
                                   const std::vector<Rational>& epsilons, int k) {
  SuiteReport report{.suite = "lemma1", .seed = seed};
  SampleRng rng(seed);
  const Rational margin = Rational::pow2(-10);

  for (const Rational& eps : epsilons) {
    ModulusCertificate cert = extended_modulus(eps, euclidean_base());
    for (int dim : {2, 3}) {
      for (int n = 0; n < samples_per_cell; ++n) {
        std::vector<Rational> c = rational_coords(rng, dim, Rational(-2), Rational(2));
        // r in [2^-5, 2]: small enough radii cannot satisfy the separation
        // premise at margin 2^-10 at all
        Rational r = rng.dyadic_in(Rational::pow2(-5), Rational(2), 12);
        Rational reach = r - margin;
        Rational need_sq = sq(r * eps + margin);

        std::vector<Rational> u, v;
        bool found = false;
        for (int attempt = 0; attempt < 30 && !found; ++attempt) {
          auto du = rational_unit_vector(rng, dim);
          auto dv = rational_unit_vector(rng, dim);
          Rational a = rng.dyadic_unit(10);
          Rational b = rng.dyadic_unit(10);
          u = add_scaled(c, a * reach, du);
          v = add_scaled(c, b * reach, dv);
          found = dist_sq(u, v) >= need_sq;
        }
        if (!found) {
          // antipodal fallback, always admissible for r >= 2^-5, eps <= 3/2
          auto du = rational_unit_vector(rng, dim);
          u = add_scaled(c, reach, du);
          v = add_scaled(c, -reach, du);
          if (dist_sq(u, v) < need_sq) {
            ++report.skipped;
            continue;
          }
        }

        ++report.cases;
        CheckOutcome outcome =
            midpoint_bound_check(Vector::from_rationals(c), CReal::from_rational(r),
                                 Vector::from_rationals(u), Vector::from_rationals(v), cert, k);
        if (outcome == CheckOutcome::Violated) {
          ++report.violations;
          if (report.note.empty())
            report.note = "violation at eps=" + eps.str() + " dim=" + std::to_string(dim) +
                          " sample=" + std::to_string(n);
        } else if (outcome == CheckOutcome::PremiseNotMet) {
          ++report.skipped;
        }
      }
    }
  }
  return report;
}

SuiteReport lemma3_soundness_sweep(std::uint64_t seed, int configs_per_eps,
                                   const std::vector<Rational>& epsilons, int k) {
  SuiteReport report{.suite = "lemma3", .seed = seed};
  SampleRng rng(seed);
  const Rational exact_bound = Rational::pow2(-10);

  for (const Rational& eps : epsilons) {
    for (int n = 0; n < configs_per_eps; ++n) {
      int dim = (n % 2 == 0) ? 2 : 3;
      std::vector<Rational> c = rational_coords(rng, dim, Rational(-1), Rational(1));
      std::vector<Rational> axis = rational_unit_vector(rng, dim);
      Rational rho = rng.dyadic_in(Rational(1, 2), Rational(2), 12);
      std::vector<Rational> d = add_scaled(c, rho, axis);

      Vector vc = Vector::from_rationals(c);
      Vector vd = Vector::from_rationals(d);
      LensDelta lens = intersection_delta(eps, vc, vd, euclidean_base());
      if (lens.branch != LensBranch::PositiveDistance) {
        // unreachable for rho >= 1/2 and eps <= 1/2; counted as a violation
        // of the dichotomy rule rather than silently skipped
        ++report.violations;
        continue;
      }

      // |r + s - rho| < delta with r, s both positive
      Rational slack = lens.delta * rng.dyadic_unit(10);
      Rational total = rho + slack;
      Rational r = rng.dyadic_in(Rational(1, 4), Rational(3, 4), 10) * total;
      Rational s = total - r;

      // common points: the segment of the center line inside both balls is
      // [rho - s, r]; transverse extent is probed through an orthogonal
      // rational direction with exact membership checks
      Rational lo = rho - s;
      std::vector<std::vector<Rational>> points;
      for (int i = 0; i < 2; ++i)
        points.push_back(add_scaled(c, lo + slack * rng.dyadic_unit(10), axis));

      std::vector<Rational> ortho(axis.size(), Rational(0));
      if (dim == 2) {
        ortho = {-axis[1], axis[0]};
      } else {
        ortho = {-axis[1], axis[0], Rational(0)};
        if (ortho[0].sign() == 0 && ortho[1].sign() == 0) ortho = {Rational(1), Rational(0), Rational(0)};
      }
      Rational ortho_sq = dist_sq(ortho, std::vector<Rational>(ortho.size(), Rational(0)));
      Rational x_mid = lo + slack / Rational(2);
      Rational cap_sq = min(sq(r) - sq(x_mid), sq(s) - sq(x_mid - rho));
      if (cap_sq.sign() > 0 && ortho_sq.sign() > 0) {
        Rational y_ub = dyadic_sqrt_upper(cap_sq / ortho_sq, 20);
        for (int i = 0; i < 4; ++i) {
          Rational y = y_ub * rng.dyadic_in(Rational(-1), Rational(1), 10);
          auto p = add_scaled(add_scaled(c, x_mid, axis), y, ortho);
          if (dist_sq(p, c) <= sq(r) && dist_sq(p, d) <= sq(s)) points.push_back(p);
        }
      }

      std::vector<std::pair<Vector, Vector>> pairs;
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
          pairs.emplace_back(Vector::from_rationals(points[i]), Vector::from_rationals(points[j]));

      ++report.cases;
      bool ok = true;
      // exact form of the guarantee, pair by pair
      for (std::size_t i = 0; i < points.size() && ok; ++i)
        for (std::size_t j = i + 1; j < points.size() && ok; ++j)
          ok = dist_sq(points[i], points[j]) <= sq(eps + exact_bound);
      // and the three-way checker as the executable form
      DiameterReport diam = diameter_bound_check(Ball(vc, CReal::from_rational(r), NormKind::P2),
                                                 Ball(vd, CReal::from_rational(s), NormKind::P2),
                                                 eps, lens.delta, pairs, k);
      if (!ok || !diam.pass || !diam.premise_met || diam.admitted == 0) {
        ++report.violations;
        if (report.note.empty())
          report.note = "violation at eps=" + eps.str() + " config=" + std::to_string(n);
      }
    }
  }
  return report;
}

SuiteReport metric_exactness_sweep(std::uint64_t seed, int configs) {
  SuiteReport report{.suite = "metric-point", .seed = seed};
  SampleRng rng(seed);
  const std::vector<int> precisions = {8, 16, 32};
  const std::vector<std::pair<int, NormKind>> cells = {
      {1, NormKind::P2}, {2, NormKind::P2}, {3, NormKind::P2},
      {1, NormKind::P1}, {2, NormKind::P1}, {3, NormKind::P1},
  };

  for (int n = 0; n < configs; ++n) {
    auto [dim, kind] = cells[static_cast<std::size_t>(n) % cells.size()];
    Vector x = Vector::from_rationals(rational_coords(rng, dim, Rational(-2), Rational(2)));
    Vector y = Vector::from_rationals(rational_coords(rng, dim, Rational(-2), Rational(2)));
    Rational t = rng.dyadic_unit(10);
    CReal rho = distance(x, y, kind);
    CReal lambda = scale(t, rho);
    CReal mu = scale(Rational(1) - t, rho);

    WitnessPoint wp = metric_point(x, y, lambda, mu, kind, 32);
    ++report.cases;
    bool ok = true;
    for (int k : precisions) {
      Rational tol = Rational::pow2(-(k - 2));
      ok = ok && abs(distance(wp.point, x, kind).approx(k) - lambda.approx(k)) <= tol;
      ok = ok && abs(distance(wp.point, y, kind).approx(k) - mu.approx(k)) <= tol;
    }
    if (!ok) {
      ++report.violations;
      if (report.note.empty()) report.note = "violation at config " + std::to_string(n);
    }
  }
  return report;
}

SuiteReport adversarial_modulus_sweep(const std::vector<int>& stages, int max_k) {
  SuiteReport report{.suite = "metric-point-adversarial"};
  for (int stage : stages) {
    for (int sign : {1, 0}) {
      AdversarialReal alpha = make_adversarial(stage, sign);
      Vector x = Vector::from_rationals({Rational(0)});
      Vector y = Vector({alpha.real});
      // the degenerate split lambda = alpha, mu = 0 (so z = alpha)
      WitnessPoint wp = metric_point(x, y, alpha.real, CReal(), NormKind::P2, 32);
      Rational truth = sign == 0 ? Rational(0) : Rational(sign) * Rational::pow2(-stage);

      std::vector<Rational> approx;
      approx.reserve(static_cast<std::size_t>(max_k) + 1);
      for (int k = 0; k <= max_k; ++k) approx.push_back(wp.point[0].approx(k));

      for (int k = 0; k <= max_k; ++k) {
        ++report.cases;
        bool ok = abs(approx[static_cast<std::size_t>(k)] - truth) <= Rational::pow2(-k);
        for (int m = k + 1; m <= max_k && ok; ++m)
          ok = abs(approx[static_cast<std::size_t>(k)] - approx[static_cast<std::size_t>(m)]) <=
               Rational::pow2(-k) + Rational::pow2(-m);
        if (!ok) {
          ++report.violations;
          if (report.note.empty())
            report.note = "stage " + std::to_string(stage) + " sign " + std::to_string(sign) +
                          " k=" + std::to_string(k);
        }
      }
    }
  }
  return report;
}

SuiteReport kernel_laws_sweep(std::uint64_t seed, int cases_per_law) {
  SuiteReport report{.suite = "kernel", .seed = seed};
  SampleRng rng(seed);
  auto note_violation = [&report](const std::string& law, long long i) {
    ++report.violations;
    if (report.note.empty()) report.note = law + " case " + std::to_string(i);
  };
  auto random_rational = [&rng]() { return rng.dyadic_in(Rational(-4), Rational(4), 14); };

  // pairwise modulus + exactness on random depth-2 expressions
  for (long long i = 0; i < cases_per_law; ++i) {
    Rational a = random_rational(), b = random_rational(), s = random_rational();
    CReal xa = CReal::from_rational(a), xb = CReal::from_rational(b);
    CReal expr;
    Rational truth;
    switch (rng.int_in(0, 6)) {
      case 0: expr = xa + xb; truth = a + b; break;
      case 1: expr = xa - xb; truth = a - b; break;
      case 2: expr = xa * xb; truth = a * b; break;
      case 3: expr = abs(xa) * xb; truth = abs(a) * b; break;
      case 4: expr = max(xa, xb) + min(xa, xb); truth = a + b; break;
      case 5: expr = scale(s, xa + xb); truth = s * (a + b); break;
      default: expr = (xa + xb) * (xa - xb); truth = a * a - b * b; break;
    }
    int k = rng.int_in(0, 64), m = rng.int_in(0, 64);
    Rational ek = expr.approx(k), em = expr.approx(m);
    ++report.cases;
    if (abs(ek - truth) > Rational::pow2(-k) || abs(em - truth) > Rational::pow2(-m) ||
        abs(ek - em) > Rational::pow2(-k) + Rational::pow2(-m))
      note_violation("pairwise-modulus", i);
  }

  // ring laws at precision
  for (long long i = 0; i < cases_per_law; ++i) {
    Rational a = random_rational(), b = random_rational();
    CReal xa = CReal::from_rational(a), xb = CReal::from_rational(b);
    int k = rng.int_in(0, 32);
    CReal expr;
    Rational truth;
    switch (i % 4) {
      case 0: expr = xa + xb; truth = a + b; break;
      case 1: expr = xa - xb; truth = a - b; break;
      case 2: expr = xa * xb; truth = a * b; break;
      default: expr = -xa; truth = -a; break;
    }
    ++report.cases;
    if (abs(expr.approx(k) - truth) > Rational::pow2(-k)) note_violation("ring-law", i);
  }

  // plus_part + minus_part = |x|
  for (long long i = 0; i < cases_per_law; ++i) {
    Rational a = random_rational();
    CReal xa = CReal::from_rational(a);
    int k = rng.int_in(0, 32);
    Rational lhs = (plus_part(xa) + minus_part(xa)).approx(k);
    Rational rhs = abs(xa).approx(k);
    ++report.cases;
    if (abs(lhs - rhs) > Rational::pow2(-(k - 1))) note_violation("plus-minus-parts", i);
  }

  // dichotomy soundness on exact rational inputs
  for (long long i = 0; i < cases_per_law; ++i) {
    Rational a = random_rational();
    Rational gap = Rational::pow2(-rng.int_in(0, 8));
    Rational b = a + gap + rng.dyadic_unit(8);
    Rational g = rng.dyadic_in(a - Rational(1), b + Rational(1), 12);
    ++report.cases;
    DichotomyVerdict v = dichotomy(CReal::from_rational(a), CReal::from_rational(b), gap,
                                   CReal::from_rational(g));
    bool ok = v == DichotomyVerdict::GammaGtAlpha ? g > a : g < b;
    if (!ok) note_violation("dichotomy", i);
  }

  // pos_or_small soundness on exact rational inputs
  for (long long i = 0; i < cases_per_law; ++i) {
    Rational e = Rational::pow2(-rng.int_in(0, 10));
    Rational x = rng.coin() ? e * rng.dyadic_unit(10) : rng.dyadic_in(Rational(0), Rational(4), 12);
    ++report.cases;
    DichotomyVerdict v = pos_or_small(CReal::from_rational(x), e);
    bool ok = v == DichotomyVerdict::Pos ? x > Rational(0) : x < e;
    if (!ok) note_violation("pos-or-small", i);
  }

  return report;
}

}  // namespace ck
