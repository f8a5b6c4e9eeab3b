#include <doctest.h>

#include "riordan/catalog.hpp"
#include "riordan/group_ops.hpp"
#include "riordan/pair.hpp"
#include "test_support.hpp"
#include "triangles.hpp"

using namespace riordan;
using test::Rng;

TEST_CASE("make_pair validates orders") {
  CHECK_THROWS_AS(make_pair(Series::zero(4), Series::identity(4)), std::domain_error);
  CHECK_THROWS_AS(make_pair(Series::one(4), Series::one(4)), std::domain_error);
  CHECK_THROWS_AS(make_pair(Series::one(4), Series::zero(4)), std::domain_error);
  RiordanPair p = identity_pair(4);
  CHECK(p.proper_normalized);
  CHECK(p.valid_to() == 4);
}

TEST_CASE("Pascal triangle from (1/(1-t), t/(1-t))") {
  RiordanPair p = named_pair("pascal", std::nullopt, 8);
  Triangle t = expand_triangle(p, 7);
  CHECK(t == test::pascal_rows());
}

TEST_CASE("expand_triangle column k is g f^k") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    RiordanPair p = random_pair(100 + trial, 8);
    Triangle t = expand_triangle(p, 9);
    Series col = p.g;
    for (int k = 0; k <= 8; ++k) {
      for (int n = 0; n <= 8; ++n) CHECK(t.at_or_zero(n, k) == col.coeff_or_zero(n));
      col = shift(mul(col, shift(p.f, -1)), 1).truncated(8);
    }
  }
}

TEST_CASE("apply_to_series matches matrix-vector product") {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    RiordanPair p = random_pair(200 + trial, 8);
    Series h = rng.series(8);
    Series lhs = apply_to_series(p, h);
    Triangle t = expand_triangle(p, 9);
    for (int n = 0; n <= 8; ++n) {
      Rational dot = 0;
      for (int k = 0; k <= n; ++k) dot += t.at(n, k) * h[k];
      CHECK(lhs[n] == dot);
    }
  }
}

TEST_CASE("pair product matches numeric triangle product") {
  for (int trial = 0; trial < 20; ++trial) {
    RiordanPair p1 = random_pair(300 + trial, 8);
    RiordanPair p2 = random_pair(400 + trial, 8);
    RiordanPair prod = multiply_pairs(p1, p2);
    Triangle lhs = expand_triangle(prod, 9);
    Triangle rhs = triangle_product(expand_triangle(p1, 9), expand_triangle(p2, 9));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("group axioms") {
  for (int trial = 0; trial < 20; ++trial) {
    RiordanPair p = random_pair(500 + trial, 8);
    RiordanPair q = random_pair(600 + trial, 8);
    RiordanPair r = random_pair(700 + trial, 8);
    RiordanPair id = identity_pair(8);

    RiordanPair left = multiply_pairs(multiply_pairs(p, q), r);
    RiordanPair right = multiply_pairs(p, multiply_pairs(q, r));
    CHECK(agree(left.g, right.g));
    CHECK(agree(left.f, right.f));

    RiordanPair pid = multiply_pairs(p, id);
    CHECK(agree(pid.g, p.g));
    CHECK(agree(pid.f, p.f));

    RiordanPair inv = invert_pair(p);
    RiordanPair prod = multiply_pairs(p, inv);
    CHECK(agree(prod.g, id.g));
    CHECK(agree(prod.f, id.f));
    RiordanPair prod2 = multiply_pairs(inv, p);
    CHECK(agree(prod2.g, id.g));
    CHECK(agree(prod2.f, id.f));
  }
}

TEST_CASE("inverse of Pascal is signed Pascal") {
  RiordanPair p = named_pair("pascal", std::nullopt, 8);
  RiordanPair inv = invert_pair(p);
  // (1/(1+t), t/(1+t))
  CHECK(agree(inv.g, Series::geometric(Rational(-1), 8)));
  CHECK(agree(inv.f, shift(Series::geometric(Rational(-1), 7), 1)));
}
