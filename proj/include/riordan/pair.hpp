#ifndef RIORDAN_PAIR_HPP
#define RIORDAN_PAIR_HPP

#include <vector>

#include "riordan/series.hpp"

namespace riordan {

/// A proper Riordan pair (g, f): g has order 0 and f has order exactly 1.
/// proper_normalized records whether g(0) = 1; operations that depend on
/// the Z-sequence require it.
struct RiordanPair {
  Series g;
  Series f;
  bool proper_normalized = false;

  int valid_to() const { return std::min(g.valid_to(), f.valid_to()); }
};

/// Explicit lower-triangular array of rationals; row n holds entries
/// d(n,0) .. d(n,n).
struct Triangle {
  std::vector<std::vector<Rational>> rows;

  int n_rows() const { return static_cast<int>(rows.size()); }
  const Rational& at(int n, int k) const { return rows[static_cast<size_t>(n)][static_cast<size_t>(k)]; }
  /// Entry d(n,k) with the upper part read as zero.
  Rational at_or_zero(int n, int k) const;

  bool operator==(const Triangle& other) const = default;
};

/// Validates orders and builds the pair; throws std::domain_error naming
/// the violated condition.
RiordanPair make_pair(Series g, Series f);

/// Rows 0 .. n_rows-1 of the matrix whose column k is generated by g f^k.
Triangle expand_triangle(const RiordanPair& p, int n_rows);

/// The matrix acting on a column vector of coefficients: g * (h o f).
Series apply_to_series(const RiordanPair& p, const Series& h);

/// Group product: (g1 g2(f1), f2(f1)), i.e. the row-by-column matrix
/// product of the two triangles.
RiordanPair multiply_pairs(const RiordanPair& p1, const RiordanPair& p2);

/// Group inverse (1/g(fbar), fbar) with fbar the compositional inverse of f.
RiordanPair invert_pair(const RiordanPair& p);

RiordanPair identity_pair(int valid_to);

/// Numeric product of two triangles on their jointly stored rows.
Triangle triangle_product(const Triangle& a, const Triangle& b);

}  // namespace riordan

#endif
