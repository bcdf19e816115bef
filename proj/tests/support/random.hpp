#pragma once

#include "ncgb/freealg.hpp"

#include <random>

namespace ncgb::fixture {

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long range = 20) {
    long den = integer(1, range);
    return Rational(integer(-range, range), den);
  }

  Scalar scalar(long range = 20) { return {rational(range), rational(range)}; }

  Scalar nonzero_scalar(long range = 20) {
    for (;;) {
      Scalar s = scalar(range);
      if (!s.is_zero()) return s;
    }
  }

  Word word(int alphabet_size, std::size_t max_len) {
    std::size_t len = static_cast<std::size_t>(integer(0, static_cast<long>(max_len)));
    Word w;
    for (std::size_t k = 0; k < len; ++k) w.push_back(static_cast<Symbol>(integer(0, alphabet_size - 1)));
    return w;
  }

  NcPoly poly(int alphabet_size, std::size_t max_terms, std::size_t max_len, long range = 5) {
    std::vector<Term> terms;
    std::size_t count = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
    for (std::size_t k = 0; k < count; ++k) terms.push_back({word(alphabet_size, max_len), scalar(range)});
    return NcPoly::from_terms(std::move(terms));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ncgb::fixture
