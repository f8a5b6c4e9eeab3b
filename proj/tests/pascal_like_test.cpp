#include <doctest.h>

#include "riordan/catalog.hpp"
#include "riordan/pascal_like.hpp"
#include "triangles.hpp"

using namespace riordan;

TEST_CASE("is_pascal_like accepts Pascal and rejects R") {
  CHECK(is_pascal_like(test::pascal_rows()).pascal_like);
  PascalLikeCheck bad = is_pascal_like(test::rna_R_rows());
  CHECK_FALSE(bad.pascal_like);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == 2);  // row 2 0 1 is not palindromic
}

TEST_CASE("all-ones triangle is Pascal-like with a1 = 0") {
  RiordanPair p = named_pair("appell_A0", std::nullopt, 10);
  PascalLikeReport rep = pascal_like_a_constraints(p, 10);
  CHECK(rep.applicable);
  CHECK(rep.a1 == 0);
  CHECK(rep.all_pass);
}

TEST_CASE("Pascal satisfies every structural constraint") {
  RiordanPair p = named_pair("pascal", std::nullopt, 12);
  PascalLikeReport rep = pascal_like_a_constraints(p, 10);
  CHECK(rep.applicable);
  CHECK(rep.a1 == 1);
  CHECK(rep.all_pass);
}

TEST_CASE("constructed a1 = 2 instance matches the Delannoy triangle") {
  // (1/(1-t), t(1+t)/(1-t)) generates the Delannoy numbers and is the
  // canonical Pascal-like instance with a1 = 2.
  RiordanPair p = make_pascal_like(Rational(2), 12);
  Series g = Series::geometric(Rational(1), 12);
  Series f = mul(shift(Series::geometric(Rational(1), 11), 1),
                 add(Series::one(12), Series::identity(12)));
  CHECK(agree(p.g, g));
  CHECK(agree(p.f, f));

  Series a = a_sequence(p);
  CHECK(a[0] == 1);
  CHECK(a[1] == 2);
  CHECK(a[2] == -2);  // a1(1 - a1)
  CHECK(a[3] == 6);
  CHECK(a[4] == -22);
}

TEST_CASE("structural constraints hold for constructed a1 = 2 and a1 = 3") {
  for (int a1 : {2, 3}) {
    RiordanPair p = make_pascal_like(Rational(a1), 12);
    Triangle t = expand_triangle(p, 11);
    CHECK(is_pascal_like(t).pascal_like);
    for (int n = 1; n <= 10; ++n) CHECK(t.at(n, n - 1) == 1 + (n - 1) * Rational(a1));
    PascalLikeReport rep = pascal_like_a_constraints(p, 10);
    CHECK(rep.applicable);
    CHECK(rep.a1 == a1);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
    CHECK(rep.all_pass);
  }
}

TEST_CASE("B-sequence classification of Pascal-like matrices") {
  PascalLikeClassification all_ones =
      classify_pascal_like_b(named_pair("appell_A0", std::nullopt, 12));
  CHECK(all_ones.kind == PascalLikeClassification::Kind::AllOnes);
  REQUIRE(all_ones.type1.exists);
  for (int j = 0; j <= all_ones.type1.b_seq->valid_to(); ++j)
    CHECK((*all_ones.type1.b_seq)[j] == 0);
  REQUIRE(all_ones.type2.has_value());
  REQUIRE(all_ones.type2->exists);
  CHECK((*all_ones.type2->b_seq)[0] == 1);
  for (int j = 1; j <= all_ones.type2->b_seq->valid_to(); ++j)
    CHECK((*all_ones.type2->b_seq)[j] == 0);

  PascalLikeClassification pascal = classify_pascal_like_b(named_pair("pascal", std::nullopt, 12));
  CHECK(pascal.kind == PascalLikeClassification::Kind::Pascal);
  REQUIRE(pascal.type1.exists);
  CHECK((*pascal.type1.b_seq)[0] == 1);
  for (int j = 1; j <= pascal.type1.b_seq->valid_to(); ++j) CHECK((*pascal.type1.b_seq)[j] == 0);
  REQUIRE(pascal.type2.has_value());
  REQUIRE(pascal.type2->exists);
  CHECK((*pascal.type2->b_seq)[0] == 1);

  for (int a1 : {2, 3}) {
    PascalLikeClassification other = classify_pascal_like_b(make_pascal_like(Rational(a1), 12));
    CHECK(other.kind == PascalLikeClassification::Kind::NoBSequence);
    CHECK_FALSE(other.type1.exists);
  }
}
