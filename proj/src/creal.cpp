#include "convexkernel/creal.hpp"

#include <utility>

namespace ck {

namespace {

struct ConstNode final : CReal::Node {
  explicit ConstNode(Rational v) : value(std::move(v)) {}
  Rational eval(int) const override { return value; }
  Rational value;
};

struct FnNode final : CReal::Node {
  explicit FnNode(std::function<Rational(int)> f) : fn(std::move(f)) {}
  Rational eval(int k) const override { return fn(k); }
  std::function<Rational(int)> fn;
};

struct InstrumentedNode final : CReal::Node {
  InstrumentedNode(std::shared_ptr<const CReal::Node> i, std::shared_ptr<QueryLog> l,
                   std::optional<int> b)
      : inner(std::move(i)), log(std::move(l)), budget(b) {}
  Rational eval(int k) const override {
    if (budget && k > *budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "oracle queried at precision " + std::to_string(k) + " beyond budget " +
                      std::to_string(*budget));
    if (log) log->record(k);
    return inner->eval(k);
  }
  std::shared_ptr<const CReal::Node> inner;
  std::shared_ptr<QueryLog> log;
  std::optional<int> budget;
};

CReal make_fn(std::function<Rational(int)> fn) { return CReal::from_fn(std::move(fn)); }

// Magnitude bound |x| <= |approx(0)| + 1, taken once at expression
// construction time.
Rational magnitude_bound(const CReal& x) { return abs(x.approx(0)) + Rational(1); }

}  // namespace

CReal::CReal() : node_(std::make_shared<ConstNode>(Rational(0))) {}

CReal CReal::from_rational(const Rational& q) {
  CReal r;
  r.node_ = std::make_shared<ConstNode>(q);
  return r;
}

CReal CReal::from_fn(std::function<Rational(int)> fn) {
  CReal r;
  r.node_ = std::make_shared<FnNode>(std::move(fn));
  return r;
}

CReal CReal::from_node(std::shared_ptr<const Node> node) {
  CReal r;
  r.node_ = std::move(node);
  return r;
}

Rational CReal::approx(int k) const { return node_->eval(k); }

const Rational* CReal::constant_value() const {
  auto* c = dynamic_cast<const ConstNode*>(node_.get());
  return c ? &c->value : nullptr;
}

Rational approx_to(const CReal& x, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative precision index");
  return x.approx(k);
}

CReal operator+(const CReal& x, const CReal& y) {
  return make_fn([x, y](int k) { return x.approx(k + 1) + y.approx(k + 1); });
}

CReal operator-(const CReal& x, const CReal& y) {
  return make_fn([x, y](int k) { return x.approx(k + 1) - y.approx(k + 1); });
}

CReal operator-(const CReal& x) {
  return make_fn([x](int k) { return -x.approx(k); });
}

CReal operator*(const CReal& x, const CReal& y) {
  // error <= Bx * 2^-my + (By + 1) * 2^-mx, each term held to 2^-(k+1)
  int shift_x = ceil_log2_geq1(magnitude_bound(y) + Rational(1));
  int shift_y = ceil_log2_geq1(magnitude_bound(x));
  return make_fn([x, y, shift_x, shift_y](int k) {
    return x.approx(k + 1 + shift_x) * y.approx(k + 1 + shift_y);
  });
}

CReal scale(const Rational& s, const CReal& x) {
  if (s.sign() == 0) return CReal();
  int shift = ceil_log2_geq1(abs(s));
  return make_fn([s, x, shift](int k) { return s * x.approx(k + shift); });
}

CReal abs(const CReal& x) {
  return make_fn([x](int k) { return abs(x.approx(k + 1)); });
}

CReal max(const CReal& x, const CReal& y) {
  return make_fn([x, y](int k) { return max(x.approx(k + 1), y.approx(k + 1)); });
}

CReal min(const CReal& x, const CReal& y) {
  return make_fn([x, y](int k) { return min(x.approx(k + 1), y.approx(k + 1)); });
}

CReal plus_part(const CReal& x) { return max(x, CReal()); }

CReal minus_part(const CReal& x) { return max(-x, CReal()); }

CReal div_pos(const CReal& num, const CReal& den, const Rational& den_lower) {
  if (den_lower.sign() <= 0)
    throw Error(ErrorCode::InvalidArgument, "div_pos requires a positive denominator bound");
  // reciprocal: query den at m with 2^-m <= lb/2, so the approximant stays
  // >= lb/2; then |1/den - 1/approx| <= 2^(-m+1)/lb^2
  int lb_bits = prec_for_bound(den_lower);
  CReal recip = make_fn([den, den_lower, lb_bits](int k) {
    int m = std::max(lb_bits + 1, k + 1 + 2 * lb_bits);
    Rational d = den.approx(m);
    if (d < den_lower - Rational::pow2(-m))
      throw Error(ErrorCode::WitnessViolation,
                  "denominator approximation fell below its certified lower bound");
    return Rational(1) / d;
  });
  return num * recip;
}

const char* to_string(DichotomyVerdict v) {
  switch (v) {
    case DichotomyVerdict::GammaGtAlpha: return "GammaGtAlpha";
    case DichotomyVerdict::GammaLtBeta: return "GammaLtBeta";
    case DichotomyVerdict::Pos: return "Pos";
    case DichotomyVerdict::SmallerThanE: return "SmallerThanE";
  }
  return "?";
}

DichotomyVerdict dichotomy(const CReal& alpha, const CReal& beta, const Rational& gap,
                           const CReal& gamma) {
  if (gap.sign() <= 0)
    throw Error(ErrorCode::InvalidArgument, "dichotomy requires a positive gap witness");
  int k = prec_for_bound(gap / Rational(8));
  Rational a = alpha.approx(k);
  Rational b = beta.approx(k);
  Rational g = gamma.approx(k);
  // detects only genuine contract breaches: when beta - alpha >= gap, the
  // approximants satisfy b - a >= gap - 2^(1-k) >= 3*gap/4
  if (b - a + Rational::pow2(1 - k) < gap / Rational(2))
    throw Error(ErrorCode::WitnessViolation,
                "dichotomy witness violated: beta - alpha < gap/2");
  Rational mid = (a + b) / Rational(2);
  return g > mid ? DichotomyVerdict::GammaGtAlpha : DichotomyVerdict::GammaLtBeta;
}

DichotomyVerdict pos_or_small(const CReal& x, const Rational& e) {
  if (e.sign() <= 0)
    throw Error(ErrorCode::InvalidArgument, "pos_or_small requires e > 0");
  int k = prec_for_bound(e / Rational(4));
  Rational a = x.approx(k);
  return a > e / Rational(2) ? DichotomyVerdict::Pos : DichotomyVerdict::SmallerThanE;
}

CReal instrument(const CReal& x, std::shared_ptr<QueryLog> log, std::optional<int> budget) {
  return CReal::from_node(std::make_shared<InstrumentedNode>(x.node(), std::move(log), budget));
}

}  // namespace ck
