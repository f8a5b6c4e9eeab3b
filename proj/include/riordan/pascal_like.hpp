#ifndef RIORDAN_PASCAL_LIKE_HPP
#define RIORDAN_PASCAL_LIKE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riordan/seq_char.hpp"

namespace riordan {

/// Row-palindromic with unit borders at every stored row.
struct PascalLikeCheck {
  bool pascal_like = true;
  std::optional<std::pair<int, int>> witness;
};

PascalLikeCheck is_pascal_like(const Triangle& t);

/// Structural constraints the A-sequence of a Pascal-like Riordan matrix
/// must satisfy: a_2 = a_1(1 - a_1), the subdiagonal law
/// d(n, n-1) = 1 + (n-1) a_1, the recursion expressing a_j from earlier
/// coefficients and triangle entries, and the divisibility of a_j by a_2
/// (integer A-sequences; over the rationals the a_2 = 0 case forces all
/// higher coefficients to vanish).
struct PascalLikeReport {
  bool applicable = false;  // triangle is Pascal-like to the requested depth
  Rational a1;
  struct Check {
    std::string name;
    bool pass = true;
    std::string witness;
  };
  std::vector<Check> checks;
  bool all_pass = false;
};

PascalLikeReport pascal_like_a_constraints(const RiordanPair& p, int depth);

/// Classification of Pascal-like Riordan matrices by B-sequence: a_1 = 0
/// and a_1 = 1 are the only members with one, and both are pinned down.
struct PascalLikeClassification {
  enum class Kind { AllOnes, Pascal, NoBSequence } kind = Kind::NoBSequence;
  Rational a1;
  BSeqVerdict type1;
  std::optional<BSeqVerdict> type2;
};

PascalLikeClassification classify_pascal_like_b(const RiordanPair& p);

/// Pascal-like Riordan pair with the prescribed a_1, built by forcing the
/// first column to ones and the subdiagonal law row by row.
RiordanPair make_pascal_like(const Rational& a1, int order);

}  // namespace riordan

#endif
