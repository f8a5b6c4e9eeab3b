#ifndef RIORDAN_TEST_SUPPORT_HPP
#define RIORDAN_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "riordan/pair.hpp"
#include "riordan/series.hpp"

namespace riordan::test {

// Deterministic small-rational generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}

  int int_in(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
  }

  Rational rational() { return Rational(int_in(-3, 3), int_in(1, 2)); }

  Rational nonzero_rational() {
    Rational r = rational();
    while (r == 0) r = rational();
    return r;
  }

  Series series(int order) {
    std::vector<Rational> v(static_cast<size_t>(order) + 1);
    for (auto& x : v) x = rational();
    return Series(std::move(v));
  }

  Series series_with_head(int order, const Rational& head) {
    Series s = series(order);
    std::vector<Rational> v = s.coeffs();
    v[0] = head;
    return Series(std::move(v));
  }

  // Order exactly 1, for composition arguments.
  Series order_one_series(int order) {
    Series s = series(order);
    std::vector<Rational> v = s.coeffs();
    v[0] = 0;
    v[1] = nonzero_rational();
    return Series(std::move(v));
  }

 private:
  std::mt19937_64 rng_;
};

// Coefficient of t^n in outer(inner) as the explicit sum over compositions
// of n: each tuple (i_1,...,i_k) of positive parts contributes
// outer_k * inner_{i_1} ... inner_{i_k}. Exponential; test-only oracle.
Rational compose_coeff_compositions(const Series& outer, const Series& inner, int n);

// The same coefficient as the sum over partitions of n in
// frequency-of-parts form, weighted by multinomial coefficients.
Rational compose_coeff_partitions(const Series& outer, const Series& inner, int n);

// Solves A(t) = 1 + t B(t^2 / A(t)) for A by fixed-point iteration;
// inverse of the type-I B-sequence extraction, used to manufacture pairs
// whose B-sequence is known in advance.
Series a_from_b(const Series& b, int order);

// Solves f = t A(f) for the f-series of a pair with A-sequence a.
Series f_from_a(const Series& a, int order);

// Pair whose type-II B-sequence is bhat by construction: the Z-sequence is
// set to bhat(t fbar) and g to 1/(1 - t Z(f)).
RiordanPair plant_type2(const Series& bhat, const Series& f);

}  // namespace riordan::test

#endif
