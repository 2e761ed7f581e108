#include "convexkernel/harness.hpp"

#include <algorithm>

namespace ck {

namespace {

// Runs a decider on an instrumented input; budget exhaustion maps to
// "no answer".
template <typename Verdict>
struct ProbeResult {
  std::optional<Verdict> verdict;
  std::size_t queries = 0;
  int max_precision = 0;
};

template <typename Verdict, typename Decider>
ProbeResult<Verdict> run_probe(const Decider& decider, const CReal& input, int budget) {
  auto log = std::make_shared<QueryLog>();
  ProbeResult<Verdict> result;
  try {
    result.verdict = decider(instrument(input, log, budget));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    result.verdict = std::nullopt;
  }
  result.queries = log->size();
  result.max_precision = std::max(0, log->max_index());
  return result;
}

// A decider that is a function of its oracle answers behaves identically on
// inputs agreeing at every queried precision; anything else escapes the
// harness's soundness argument and is rejected.
[[noreturn]] void reject_unstable_decider() {
  throw Error(ErrorCode::InvalidArgument,
              "decider changed its verdict on an input indistinguishable from the probe");
}

}  // namespace

AdversarialReal make_adversarial(int stage, int sign) {
  if (stage < 0) throw Error(ErrorCode::InvalidArgument, "commitment stage must be >= 0");
  if (sign < -1 || sign > 1)
    throw Error(ErrorCode::InvalidArgument, "adversarial sign must be -1, 0 or +1");
  AdversarialReal a;
  a.commitment_stage = stage;
  a.sign = sign;
  Rational committed = sign == 0 ? Rational(0) : Rational(sign) * Rational::pow2(-stage);
  a.real = CReal::from_fn([stage, committed](int k) {
    return k < stage ? Rational(0) : committed;
  });
  return a;
}

const char* to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::HullMembership: return "HullMembership";
    case ReductionKind::OsculationRealLine: return "OsculationRealLine";
    case ReductionKind::TwoElementClosure: return "TwoElementClosure";
  }
  return "?";
}

const char* to_string(Principle p) {
  switch (p) {
    case Principle::LPO: return "LPO";
    case Principle::LLPO: return "LLPO";
  }
  return "?";
}

const char* to_string(HarnessOutcome o) {
  switch (o) {
    case HarnessOutcome::Falsified: return "Falsified";
    case HarnessOutcome::NonTotal: return "NonTotal";
    case HarnessOutcome::NotFalsified: return "NotFalsified";
  }
  return "?";
}

FalsificationReport hull_membership_reduction(const HullDecider& decider, int budget) {
  FalsificationReport report;
  report.reduction = ReductionKind::HullMembership;
  report.principle = Principle::LLPO;
  report.budget = budget;

  auto probe = run_probe<Rational, HullDecider>(decider, CReal(), budget);
  report.probe_queries = probe.queries;
  report.max_queried_precision = probe.max_precision;
  if (!probe.verdict) return report;  // NonTotal

  Rational t = *probe.verdict;
  if (t < Rational(0) || t > Rational(1))
    throw Error(ErrorCode::InvalidArgument, "hull decider returned t outside [0,1]");
  report.committed_verdict = "t=" + t.str();
  report.verdict_value = t;

  // Either t < 1 or t > 0. A verdict excluding t=1 is contradicted in the
  // alpha > 0 world (which forces t=1); one excluding t=0 in alpha < 0.
  DichotomyVerdict side =
      dichotomy(CReal(), CReal::from_rational(Rational(1)), Rational(1), CReal::from_rational(t));
  int sign = side == DichotomyVerdict::GammaLtBeta ? +1 : -1;
  const int K = report.max_queried_precision;
  AdversarialReal refuting = make_adversarial(K + 1, sign);

  auto rerun = run_probe<Rational, HullDecider>(decider, refuting.real, budget);
  if (!rerun.verdict || *rerun.verdict != t) reject_unstable_decider();

  // defining equation: alpha = (2t - 1)|alpha|
  CReal lhs = refuting.real;
  CReal rhs = scale(Rational(2) * t - Rational(1), abs(refuting.real));
  report.defect_precision = K + 4;
  report.defect = abs(lhs - rhs).approx(report.defect_precision);
  report.margin_required = Rational::pow2(-(K + 2));
  report.refuting = AdversarialSpec{K + 1, sign};
  report.outcome = *report.defect >= *report.margin_required ? HarnessOutcome::Falsified
                                                             : HarnessOutcome::NotFalsified;
  return report;
}

FalsificationReport osculation_reduction(const OsculationDecider& decider, int budget) {
  FalsificationReport report;
  report.reduction = ReductionKind::OsculationRealLine;
  report.principle = Principle::LLPO;
  report.budget = budget;

  auto probe = run_probe<Rational, OsculationDecider>(decider, CReal(), budget);
  report.probe_queries = probe.queries;
  report.max_queried_precision = probe.max_precision;
  if (!probe.verdict) return report;

  Rational lambda = *probe.verdict;
  report.committed_verdict = "lambda=" + lambda.str();
  report.verdict_value = lambda;

  // Either lambda > 0 or lambda < 1; alpha > 0 forces lambda = 0 and
  // alpha < 0 forces lambda = 1.
  DichotomyVerdict side = dichotomy(CReal(), CReal::from_rational(Rational(1)), Rational(1),
                                    CReal::from_rational(lambda));
  int sign = side == DichotomyVerdict::GammaGtAlpha ? +1 : -1;
  const int K = report.max_queried_precision;
  AdversarialReal refuting = make_adversarial(K + 1, sign);

  auto rerun = run_probe<Rational, OsculationDecider>(decider, refuting.real, budget);
  if (!rerun.verdict || *rerun.verdict != lambda) reject_unstable_decider();

  // x = lambda*alpha must lie in both B_{alpha^-}(0) and B_{alpha^+}(alpha)
  CReal alpha = refuting.real;
  CReal x = scale(lambda, alpha);
  CReal defect_b1 = abs(x) - minus_part(alpha);
  CReal defect_b2 = abs(x - alpha) - plus_part(alpha);
  report.defect_precision = K + 4;
  report.defect = max(defect_b1, defect_b2).approx(report.defect_precision);
  report.margin_required = Rational::pow2(-(K + 2));
  report.refuting = AdversarialSpec{K + 1, sign};
  report.outcome = *report.defect >= *report.margin_required ? HarnessOutcome::Falsified
                                                             : HarnessOutcome::NotFalsified;
  return report;
}

FalsificationReport closure_reduction(const ClosureDecider& decider, int budget) {
  FalsificationReport report;
  report.reduction = ReductionKind::TwoElementClosure;
  report.principle = Principle::LPO;
  report.budget = budget;

  auto probe = run_probe<ClosureAnswer, ClosureDecider>(decider, CReal(), budget);
  report.probe_queries = probe.queries;
  report.max_queried_precision = probe.max_precision;
  if (!probe.verdict) return report;

  const int K = report.max_queried_precision;
  if (*probe.verdict == ClosureAnswer::IsZero) {
    report.committed_verdict = "alpha=0";
    AdversarialReal refuting = make_adversarial(K + 1, +1);
    auto rerun = run_probe<ClosureAnswer, ClosureDecider>(decider, refuting.real, budget);
    if (!rerun.verdict || *rerun.verdict != ClosureAnswer::IsZero) reject_unstable_decider();
    report.defect_precision = K + 4;
    report.defect = abs(refuting.real).approx(report.defect_precision);
    report.margin_required = Rational::pow2(-(K + 2));
    report.refuting = AdversarialSpec{K + 1, +1};
    report.outcome = *report.defect >= *report.margin_required ? HarnessOutcome::Falsified
                                                               : HarnessOutcome::NotFalsified;
    return report;
  }

  // "alpha > 0" committed after finitely many zero answers: the all-zero
  // continuation refutes it. The certificate is finite-depth by nature.
  report.committed_verdict = "alpha>0";
  auto rerun = run_probe<ClosureAnswer, ClosureDecider>(decider, CReal(), budget);
  if (!rerun.verdict || *rerun.verdict != ClosureAnswer::IsPositive) reject_unstable_decider();
  int depth = std::max(2 * K, 32);
  for (int j = 0; j <= depth; ++j) {
    if (CReal().approx(j).sign() != 0)
      throw Error(ErrorCode::InvalidArgument, "zero stream failed its own certificate");
  }
  report.refuting = AdversarialSpec{0, 0};
  report.zero_certificate_depth = depth;
  report.outcome = HarnessOutcome::Falsified;
  return report;
}

namespace {

// answers only once the sign is certain: approx(k) > 2^(1-k) implies the
// value exceeds 2^(1-k) - 2^-k > 0
template <typename Answer>
std::optional<Answer> sign_search(const CReal& alpha, Answer on_positive, Answer on_negative,
                                  bool negative_possible) {
  for (int k = 0;; ++k) {
    Rational v = approx_to(alpha, k);
    Rational threshold = Rational::pow2(1 - k);
    if (v > threshold) return on_positive;
    if (negative_possible && v < -threshold) return on_negative;
  }
}

}  // namespace

HullDecider builtin_hull_decider(const std::string& name) {
  if (name == "const-t")
    return [](const CReal&) { return Rational(1, 2); };
  if (name == "threshold-k")
    return [](const CReal& alpha) {
      return approx_to(alpha, 20) > Rational(0) ? Rational(1) : Rational(0);
    };
  if (name == "honest-partial")
    return [](const CReal& alpha) {
      // alpha > 0 forces t=1, alpha < 0 forces t=0
      return sign_search<Rational>(alpha, Rational(1), Rational(0), true);
    };
  throw Error(ErrorCode::InvalidArgument, "unknown builtin decider: " + name);
}

OsculationDecider builtin_osculation_decider(const std::string& name) {
  if (name == "const-t")
    return [](const CReal&) { return Rational(1, 2); };
  if (name == "threshold-k")
    return [](const CReal& alpha) {
      Rational v = approx_to(alpha, 20);
      if (v > Rational(0)) return Rational(0);  // alpha > 0 would force lambda = 0
      if (v < Rational(0)) return Rational(1);
      return Rational(0);
    };
  if (name == "honest-partial")
    return [](const CReal& alpha) {
      return sign_search<Rational>(alpha, Rational(0), Rational(1), true);
    };
  throw Error(ErrorCode::InvalidArgument, "unknown builtin decider: " + name);
}

ClosureDecider builtin_closure_decider(const std::string& name) {
  if (name == "const-t")
    return [](const CReal&) { return ClosureAnswer::IsPositive; };
  if (name == "threshold-k")
    return [](const CReal& alpha) {
      return approx_to(alpha, 16) > Rational::pow2(-16) ? ClosureAnswer::IsPositive
                                                        : ClosureAnswer::IsZero;
    };
  if (name == "honest-partial")
    return [](const CReal& alpha) {
      // only a positive sign is ever certain; alpha = 0 has no finite witness
      return sign_search<ClosureAnswer>(alpha, ClosureAnswer::IsPositive,
                                        ClosureAnswer::IsPositive, false);
    };
  throw Error(ErrorCode::InvalidArgument, "unknown builtin decider: " + name);
}

HarnessOutcome builtin_expected_outcome(const std::string& name) {
  if (name == "const-t" || name == "threshold-k") return HarnessOutcome::Falsified;
  if (name == "honest-partial") return HarnessOutcome::NonTotal;
  throw Error(ErrorCode::InvalidArgument, "unknown builtin decider: " + name);
}

FalsificationReport run_builtin_demo(ReductionKind kind, const std::string& decider_name,
                                     int budget) {
  switch (kind) {
    case ReductionKind::HullMembership:
      return hull_membership_reduction(builtin_hull_decider(decider_name), budget);
    case ReductionKind::OsculationRealLine:
      return osculation_reduction(builtin_osculation_decider(decider_name), budget);
    case ReductionKind::TwoElementClosure:
      return closure_reduction(builtin_closure_decider(decider_name), budget);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown reduction kind");
}

}  // namespace ck
