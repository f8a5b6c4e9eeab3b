#include <doctest.h>

#include "riordan/catalog.hpp"
#include "riordan/seq_char.hpp"
#include "triangles.hpp"

using namespace riordan;

TEST_CASE("RNA structure counts, both routes, deep truncation") {
  Series g = rna_g(64);  // throws if the quadratic and closed form disagree
  const int expected[] = {1, 1, 1, 2, 4, 8, 17, 37};
  for (int j = 0; j < 8; ++j) CHECK(g[j] == expected[j]);
  CHECK(g.valid_to() == 64);
}

TEST_CASE("published triangles are reproduced entry for entry") {
  CHECK(expand_triangle(named_pair("rna_R", std::nullopt, 8), 7) == test::rna_R_rows());
  CHECK(expand_triangle(named_pair("rna_Rstar", std::nullopt, 8), 7) == test::rna_Rstar_rows());
  CHECK(expand_triangle(named_pair("rna_Rstarstar", std::nullopt, 8), 7) ==
        test::rna_Rstarstar_rows());
  CHECK(expand_triangle(named_pair("gen_pascal", Rational(1), 8), 7) == test::pascal_rows());
}

TEST_CASE("gen_pascal characteristic sequences for k = 1, 2, 3") {
  for (int k = 1; k <= 3; ++k) {
    RiordanPair p = named_pair("gen_pascal", Rational(k), 12);
    Series a = a_sequence(p);
    Series z = z_sequence(p);
    CHECK(a[0] == 1);
    CHECK(a[1] == k);
    for (int j = 2; j <= a.valid_to(); ++j) CHECK(a[j] == 0);
    CHECK(z[0] == k);
    for (int j = 1; j <= z.valid_to(); ++j) CHECK(z[j] == 0);
    BSeqVerdict b = type1_b_from_f(p.f);
    REQUIRE(b.exists);
    CHECK((*b.b_seq)[0] == k);
    for (int j = 1; j <= b.b_seq->valid_to(); ++j) CHECK((*b.b_seq)[j] == 0);
  }
}

TEST_CASE("conjugation moves Pascal to R* and R* to R") {
  const int order = 14;
  RiordanPair pascal = named_pair("pascal", std::nullopt, order);
  RiordanPair c0 = named_pair("catalan_C0", std::nullopt, order);
  RiordanPair c0_inv = invert_pair(c0);
  // The inverse of (C(t^2), t C(t^2)) is (1/(1+t^2), t/(1+t^2)).
  Series alt = Series::geometric(Rational(-1), order / 2);  // 1/(1+u) in u = t^2
  std::vector<Rational> gv(static_cast<size_t>(order) + 1, Rational(0));
  for (int j = 0; 2 * j <= order; ++j) gv[static_cast<size_t>(2 * j)] = alt[j];
  Series g_expected(std::move(gv));
  CHECK(agree(c0_inv.g, g_expected));
  CHECK(agree(c0_inv.f, shift(g_expected, 1).truncated(order)));

  RiordanPair rstar = multiply_pairs(multiply_pairs(c0_inv, pascal), c0);
  Triangle lhs = expand_triangle(rstar, 13);
  Triangle rhs = expand_triangle(named_pair("rna_Rstar", std::nullopt, order), 13);
  CHECK(lhs == rhs);

  RiordanPair a0 = named_pair("appell_A0", std::nullopt, order);
  RiordanPair a0_inv = invert_pair(a0);
  CHECK(agree(a0_inv.g, sub(Series::one(order), Series::identity(order))));
  RiordanPair r = multiply_pairs(multiply_pairs(a0_inv, rstar), a0);
  CHECK(expand_triangle(r, 13) == expand_triangle(named_pair("rna_R", std::nullopt, order), 13));
}

TEST_CASE("first-column laws of R**") {
  FirstColumnLawReport rep = rna_first_column_law(10);
  CHECK(rep.additive_law);
  CHECK(rep.convolution_law);
  CHECK(rep.checked_to == 10);
  CHECK_FALSE(rep.witness_row.has_value());
}

TEST_CASE("ex31_a is the geometric pair") {
  RiordanPair p = named_pair("ex31_a", std::nullopt, 8);
  CHECK(agree(p.g, Series::geometric(Rational(2), 8)));
  CHECK(agree(p.f, shift(Series::geometric(Rational(1), 7), 1)));
}

TEST_CASE("unknown names are rejected with the catalog listing") {
  CHECK_THROWS_WITH_AS(named_pair("no_such", std::nullopt, 8),
                       doctest::Contains("valid names"), std::invalid_argument);
  CHECK(catalog_entries().size() == 11);
}
