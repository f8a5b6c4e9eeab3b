#include <doctest.h>

#include "riordan/group_ops.hpp"
#include "riordan/io.hpp"
#include "test_support.hpp"
#include "triangles.hpp"

using namespace riordan;
using test::Rng;

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(parse_rational(" 22/7 ") == Rational(22, 7));
  CHECK(parse_rational("-5") == -5);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
}

TEST_CASE("series parsing and integer rendering") {
  Series s = parse_series("1, 1/2, -3, 0");
  CHECK(s.valid_to() == 3);
  CHECK(s[1] == Rational(1, 2));
  CHECK(format_series(s) == "1, 1/2, -3, 0");
}

TEST_CASE("pair grammar") {
  RiordanPair p = parse_pair("g: 1,1,1,1\nf: 0,1,1,1\n");
  CHECK(p.proper_normalized);
  CHECK(p.g[3] == 1);
  CHECK(p.f[1] == 1);
  CHECK_THROWS_AS(parse_pair("g: 1,1\n"), ParseError);
  CHECK_THROWS_AS(parse_pair("h: 1,1\nf: 0,1\n"), ParseError);
}

TEST_CASE("triangle grammar and ragged rows") {
  Triangle t = parse_triangle("1\n1 1\n1 2 1\n");
  CHECK(t == test::truncate_rows(test::pascal_rows(), 3));
  CHECK_THROWS_AS(parse_triangle("1\n1 1 1\n"), ParseError);
}

TEST_CASE("zero denominator carries position") {
  try {
    (void)parse_series("1, 1/0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column > 1);
  }
}

TEST_CASE("parse_input detects the grammar") {
  CHECK(std::holds_alternative<Series>(parse_input("1, 2, 3")));
  CHECK(std::holds_alternative<RiordanPair>(parse_input("g: 1,1\nf: 0,1\n")));
  CHECK(std::holds_alternative<Triangle>(parse_input("1\n1 1\n")));
}

TEST_CASE("serialization round trips on random instances") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    Series s = rng.series(rng.int_in(0, 10));
    CHECK(parse_series(format_series(s)) == s);

    RiordanPair p = random_pair(20'000 + trial, 8);
    RiordanPair q = parse_pair(format_pair(p));
    CHECK(q.g == p.g);
    CHECK(q.f == p.f);

    Triangle t = expand_triangle(p, rng.int_in(1, 9));
    CHECK(parse_triangle(format_triangle(t)) == t);
  }
}

TEST_CASE("report formatting") {
  BSeqVerdict v;
  v.kind = BKind::TypeII;
  v.exists = false;
  v.witness_index = 1;
  CHECK(format_verdict(v) == "kind: type-II\nverdict: NO at index 1\n");

  MembershipResult m;
  m.member = true;
  m.checked_to = 16;
  CHECK(format_membership(m) == "MEMBER to order 16\n");
}
