#include "riordan/pascal_like.hpp"

#include <algorithm>
#include <stdexcept>

namespace riordan {

PascalLikeCheck is_pascal_like(const Triangle& t) {
  PascalLikeCheck c;
  for (int n = 0; n < t.n_rows(); ++n) {
    if (t.at(n, 0) != 1) {
      c.pascal_like = false;
      c.witness = {n, 0};
      return c;
    }
    if (t.at(n, n) != 1) {
      c.pascal_like = false;
      c.witness = {n, n};
      return c;
    }
    for (int k = 1; 2 * k <= n; ++k) {
      if (t.at(n, k) != t.at(n, n - k)) {
        c.pascal_like = false;
        c.witness = {n, k};
        return c;
      }
    }
  }
  return c;
}

PascalLikeReport pascal_like_a_constraints(const RiordanPair& p, int depth) {
  PascalLikeReport report;
  Triangle t = expand_triangle(p, depth);
  PascalLikeCheck plc = is_pascal_like(t);
  if (!plc.pascal_like) return report;
  report.applicable = true;

  Series a = a_sequence(p);
  report.a1 = a.valid_to() >= 1 ? a[1] : Rational(0);
  const Rational& a1 = report.a1;
  Rational a2_law = a1 * (1 - a1);

  auto add_check = [&](std::string name, bool pass, std::string witness) {
    report.checks.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
  };

  add_check("a0 = 1", a[0] == 1, "a0 = " + to_string(a[0]));
  if (a.valid_to() >= 2)
    add_check("a2 = a1(1-a1)", a[2] == a2_law, "a2 = " + to_string(a[2]));

  // Subdiagonal law d(n, n-1) = 1 + (n-1) a1.
  {
    bool pass = true;
    std::string witness;
    for (int n = 1; n < depth; ++n) {
      if (t.at(n, n - 1) != 1 + Rational(n - 1) * a1) {
        pass = false;
        witness = "(" + std::to_string(n) + "," + std::to_string(n - 1) + ")";
        break;
      }
    }
    add_check("subdiagonal d(n,n-1) = 1+(n-1)a1", pass, std::move(witness));
  }

  // Recursion a_j = (j-1) a1 (1-a1) - sum_{i=2}^{j-1} a_i d(j, i), read off
  // row j via the palindromic entry d(j+1, 1) = d(j+1, j).
  {
    bool pass = true;
    std::string witness;
    int jmax = std::min(a.valid_to(), depth - 1);
    for (int j = 2; j <= jmax; ++j) {
      Rational rhs = Rational(j - 1) * a2_law;
      for (int i = 2; i < j; ++i) rhs -= a[i] * t.at(j, i);
      if (a[j] != rhs) {
        pass = false;
        witness = "a" + std::to_string(j);
        break;
      }
    }
    add_check("recursion for a_j", pass, std::move(witness));
  }

  // Divisibility a2 | a_j, meaningful for integer A-sequences; over the
  // rationals a2 = 0 forces a_j = 0 for j >= 2.
  {
    bool integral = true;
    for (int j = 0; j <= a.valid_to(); ++j) integral = integral && is_integer(a[j]);
    bool pass = true;
    std::string witness;
    for (int j = 2; j <= a.valid_to(); ++j) {
      bool ok;
      if (a2_law == 0) {
        ok = a[j] == 0;
      } else if (integral) {
        ok = numerator(a[j]) % numerator(Rational(a2_law)) == 0;
      } else {
        ok = true;  // nothing to check for non-integer sequences with a2 != 0
      }
      if (!ok) {
        pass = false;
        witness = "a" + std::to_string(j) + " = " + to_string(a[j]);
        break;
      }
    }
    add_check("a2 divides a_j", pass, std::move(witness));
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const auto& c) { return c.pass; });
  return report;
}

PascalLikeClassification classify_pascal_like_b(const RiordanPair& p) {
  int depth = p.valid_to() + 1;
  Triangle t = expand_triangle(p, depth);
  PascalLikeCheck plc = is_pascal_like(t);
  if (!plc.pascal_like) throw std::domain_error("triangle is not Pascal-like");

  PascalLikeClassification result;
  Series a = a_sequence(p);
  result.a1 = a.valid_to() >= 1 ? a[1] : Rational(0);
  result.type1 = type1_b_from_a(a);
  if (result.a1 == 0) {
    result.kind = PascalLikeClassification::Kind::AllOnes;
    result.type2 = type2_b(p);
  } else if (result.a1 == 1) {
    result.kind = PascalLikeClassification::Kind::Pascal;
    result.type2 = type2_b(p);
  } else {
    result.kind = PascalLikeClassification::Kind::NoBSequence;
  }
  return result;
}

RiordanPair make_pascal_like(const Rational& a1, int order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  // Grow the triangle row by row, forcing column 0 to ones (fixing z_n)
  // and the palindromic entry d(n+1,1) = 1 + n a1 (fixing a_n).
  int rows = order + 2;
  std::vector<std::vector<Rational>> d(static_cast<size_t>(rows));
  d[0] = {Rational(1)};
  d[1] = {Rational(1), Rational(1)};
  std::vector<Rational> a = {Rational(1), a1};
  std::vector<Rational> z = {Rational(1)};
  for (int n = 1; n + 1 < rows; ++n) {
    Rational sz = 0, sa = 0;
    for (int j = 0; j < n; ++j) {
      sz += z[static_cast<size_t>(j)] * d[static_cast<size_t>(n)][static_cast<size_t>(j)];
      if (j < static_cast<int>(a.size()))
        sa += a[static_cast<size_t>(j)] * d[static_cast<size_t>(n)][static_cast<size_t>(j)];
    }
    z.push_back((1 - sz) / d[static_cast<size_t>(n)][static_cast<size_t>(n)]);
    if (n >= 2) {
      Rational target = 1 + Rational(n) * a1;
      a.push_back((target - sa) / d[static_cast<size_t>(n)][static_cast<size_t>(n)]);
    }
    auto& row = d[static_cast<size_t>(n + 1)];
    row.resize(static_cast<size_t>(n + 2));
    row[0] = 1;
    for (int k = 1; k <= n + 1; ++k) {
      Rational s = 0;
      for (int j = 0; k - 1 + j <= n; ++j)
        s += a[static_cast<size_t>(j)] * d[static_cast<size_t>(n)][static_cast<size_t>(k - 1 + j)];
      row[static_cast<size_t>(k)] = s;
    }
  }
  return pair_from_a_z(Series(std::vector<Rational>(a.begin(), a.begin() + order + 1)),
                       Series(std::vector<Rational>(z.begin(), z.begin() + order + 1)));
}

}  // namespace riordan
