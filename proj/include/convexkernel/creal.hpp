#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "convexkernel/error.hpp"
#include "convexkernel/rational.hpp"

namespace ck {

// Ordered record of the precision indices requested from an instrumented
// real. Instrumentation is a single-threaded harness facility; logs are not
// synchronized.
class QueryLog {
 public:
  void record(int k) { entries_.push_back(k); }
  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  // Largest index queried so far, or -1 when nothing was queried.
  int max_index() const {
    int m = -1;
    for (int k : entries_)
      if (k > m) m = k;
    return m;
  }
};

// A constructive real: an approximation oracle k |-> Rational with the
// guarantee |approx(k) - x| <= 2^-k for the represented value x. Values are
// immutable; copies share the underlying expression node.
//
// Every combinator below preserves the guarantee by querying its operands at
// precisions derived from the target index (see each operation). Nothing is
// cached between queries, so evaluation is deterministic and thread-safe for
// non-instrumented values.
class CReal {
 public:
  struct Node {
    virtual ~Node() = default;
    virtual Rational eval(int k) const = 0;
  };

  CReal();  // the constant 0
  static CReal from_rational(const Rational& q);
  // Wraps an arbitrary approximation function. The caller is responsible for
  // the modulus guarantee; nothing can check it eagerly.
  static CReal from_fn(std::function<Rational(int)> fn);

  Rational approx(int k) const;

  // Non-null exactly when this value is a constant rational stream (the only
  // serializable kind of CReal).
  const Rational* constant_value() const;

  std::shared_ptr<const Node> node() const { return node_; }
  static CReal from_node(std::shared_ptr<const Node> node);

 private:
  std::shared_ptr<const Node> node_;
};

// Oracle access point. Requires k >= 0; appends k to the query log when the
// value is instrumented.
Rational approx_to(const CReal& x, int k);

// Arithmetic. add/sub/max/min/abs query operands at k+1; neg queries at k;
// scale queries at k plus the bit size of the factor; mul derives operand
// precisions from magnitude bounds |approx(0)| + 1 cached at construction.
CReal operator+(const CReal& x, const CReal& y);
CReal operator-(const CReal& x, const CReal& y);
CReal operator-(const CReal& x);
CReal operator*(const CReal& x, const CReal& y);
CReal scale(const Rational& s, const CReal& x);
CReal abs(const CReal& x);
CReal max(const CReal& x, const CReal& y);
CReal min(const CReal& x, const CReal& y);

// max{x, 0} and max{-x, 0}; plus_part(x) + minus_part(x) = |x| exactly.
CReal plus_part(const CReal& x);
CReal minus_part(const CReal& x);

// num / den for den bounded below by the caller-certified rational
// den_lower > 0. Division without such a bound is not a total operation on
// approximation oracles and is deliberately absent.
CReal div_pos(const CReal& num, const CReal& den, const Rational& den_lower);

// Proof-relevant branch marker for the two dichotomy primitives. Both
// branches may be true simultaneously; the returned one is decided by a
// fixed deterministic rule and its claim is guaranteed.
enum class DichotomyVerdict {
  GammaGtAlpha,  // gamma > alpha
  GammaLtBeta,   // gamma < beta
  Pos,           // x > 0 (at least e/4)
  SmallerThanE,  // x < e
};

const char* to_string(DichotomyVerdict v);

// Constructive dichotomy: given alpha < beta witnessed by the rational gap
// (beta - alpha >= gap > 0), decides gamma > alpha or gamma < beta.
//
// Rule: approximate alpha, beta, gamma at the least k with 2^-k <= gap/8 and
// compare gamma's approximant against the midpoint of alpha's and beta's.
// Throws WitnessViolation if the approximations reveal beta - alpha < gap/2.
DichotomyVerdict dichotomy(const CReal& alpha, const CReal& beta, const Rational& gap,
                           const CReal& gamma);

// For x >= 0 (caller contract) and e > 0: either x > 0 or x < e.
// Rule: approximate x at the least k with 2^-k <= e/4; answer Pos iff the
// approximant exceeds e/2. Pos guarantees x > e/4.
DichotomyVerdict pos_or_small(const CReal& x, const Rational& e);

// Returns a view of x that records every precision index requested through
// it (including queries made by expressions built on top of it) and throws
// BudgetExceeded for indices above `budget` when one is given.
CReal instrument(const CReal& x, std::shared_ptr<QueryLog> log,
                 std::optional<int> budget = std::nullopt);

}  // namespace ck
