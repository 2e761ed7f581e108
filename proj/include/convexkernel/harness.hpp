#pragma once

#include <functional>
#include <optional>
#include <string>

#include "convexkernel/creal.hpp"

namespace ck {

// Sign-indeterminate stream: approx(k) = 0 for k < stage and sign * 2^-stage
// from the stage on. Indistinguishable from zero below the commitment stage,
// yet a valid constructive real.
struct AdversarialReal {
  int commitment_stage = 0;
  int sign = 0;  // -1, 0, +1
  CReal real;
};

AdversarialReal make_adversarial(int stage, int sign);

// Deciders under test receive their input only through the instrumented
// oracle and answer with a rational parameter (hull / osculation) or a
// branch (closure). Returning nullopt declares "no answer" and is reported
// as NonTotal, as is exceeding the precision budget.
using HullDecider = std::function<std::optional<Rational>(const CReal&)>;
using OsculationDecider = std::function<std::optional<Rational>(const CReal&)>;

enum class ClosureAnswer { IsZero, IsPositive };
using ClosureDecider = std::function<std::optional<ClosureAnswer>(const CReal&)>;

enum class ReductionKind { HullMembership, OsculationRealLine, TwoElementClosure };
enum class Principle { LPO, LLPO };
enum class HarnessOutcome {
  Falsified,
  NonTotal,
  NotFalsified,  // unreachable for deciders that are functions of the oracle
};

const char* to_string(ReductionKind k);
const char* to_string(Principle p);
const char* to_string(HarnessOutcome o);

struct AdversarialSpec {
  int stage = 0;
  int sign = 0;
};

// Outcome of one instrument-commit-refute run. When outcome == Falsified,
// the refuting input agrees with the probe at every precision the decider
// queried, reproduces the committed verdict, and makes the verdict's
// defining equation fail by at least margin_required (evaluated at
// defect_precision = K + 4); for the closure reduction's "alpha > 0" branch
// the refutation is the all-zero stream, certified to zero_certificate_depth.
struct FalsificationReport {
  ReductionKind reduction = ReductionKind::HullMembership;
  Principle principle = Principle::LLPO;
  HarnessOutcome outcome = HarnessOutcome::NonTotal;
  AdversarialSpec probe;  // always the zero stream
  std::string committed_verdict;
  std::optional<Rational> verdict_value;
  int max_queried_precision = 0;  // K
  std::size_t probe_queries = 0;
  int budget = 0;
  std::optional<AdversarialSpec> refuting;
  std::optional<Rational> defect;
  std::optional<Rational> margin_required;  // 2^-(K+2)
  int defect_precision = 0;                 // K + 4
  std::optional<int> zero_certificate_depth;
};

inline constexpr int kDefaultBudget = 1024;  // 2^10

// "alpha in H{-|alpha|, |alpha|}", i.e. a total procedure returning t in
// [0,1] with alpha = (2t-1)|alpha|. Implies LLPO.
FalsificationReport hull_membership_reduction(const HullDecider& decider,
                                              int budget = kDefaultBudget);

// "Osculating balls B_{alpha^-}(0), B_{alpha^+}(alpha) on the line through
// alpha have a common point lambda*alpha". Implies LLPO.
FalsificationReport osculation_reduction(const OsculationDecider& decider,
                                         int budget = kDefaultBudget);

// "For alpha >= 0, either alpha = 0 or alpha > 0" (the membership question
// for S = {0 : alpha < c} u {alpha : alpha > 0} reduces to this form on
// adversarial dyadics). Implies LPO.
FalsificationReport closure_reduction(const ClosureDecider& decider,
                                      int budget = kDefaultBudget);

// Built-in deciders, keyed by CLI name: "const-t" and "threshold-k" are
// dishonest total claimants, "honest-partial" answers only on a decided
// sign and runs out of budget on the zero stream.
HullDecider builtin_hull_decider(const std::string& name);
OsculationDecider builtin_osculation_decider(const std::string& name);
ClosureDecider builtin_closure_decider(const std::string& name);
HarnessOutcome builtin_expected_outcome(const std::string& name);

FalsificationReport run_builtin_demo(ReductionKind kind, const std::string& decider_name,
                                     int budget = kDefaultBudget);

}  // namespace ck
