#pragma once

#include <random>

#include "postlie/matrix.hpp"

namespace postlie {

// Deterministic sampler for property tests and randomized checks. Rationals
// are drawn with small height (numerator in [-9,9], denominator in [1,9]);
// F_p values uniformly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long int_in(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  Scalar scalar(const Field& f) {
    if (f.is_prime()) return Scalar::of_long(f, int_in(0, f.characteristic() - 1));
    return Scalar::of_fraction(f, int_in(-9, 9), int_in(1, 9));
  }

  Scalar nonzero_scalar(const Field& f) {
    while (true) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  Vec vector(const Field& f, int n) {
    Vec v = zero_vec(f, n);
    for (auto& s : v) s = scalar(f);
    return v;
  }

  Vec nonzero_vector(const Field& f, int n) {
    while (true) {
      Vec v = vector(f, n);
      if (!vec_is_zero(v)) return v;
    }
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace postlie
