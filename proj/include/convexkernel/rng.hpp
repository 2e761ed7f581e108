#pragma once

#include <cstdint>

#include "convexkernel/rational.hpp"

namespace ck {

// Fixed 64-bit linear congruential generator for reproducible sampling,
// specified for cross-language replay (see README):
//   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
// draw_bits(b) advances once and returns the top b bits of the new state.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  std::uint64_t draw_bits(int bits) { return next() >> (64 - bits); }

  // Dyadic rational in [0, 1): draw_bits(bits) / 2^bits.
  Rational dyadic_unit(int bits = 16) {
    return Rational(mpq_class(mpz_class(static_cast<unsigned long>(draw_bits(bits))),
                              Rational::pow2(bits).numerator()));
  }

  // lo + (hi - lo) * dyadic_unit(bits).
  Rational dyadic_in(const Rational& lo, const Rational& hi, int bits = 16) {
    return lo + (hi - lo) * dyadic_unit(bits);
  }

  // Uniform integer in [lo, hi], via draw_bits(32) mod span.
  int int_in(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(draw_bits(32) % span);
  }

  bool coin() { return draw_bits(1) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace ck
