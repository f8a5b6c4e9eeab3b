#include "riordan/pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace riordan {

Rational Triangle::at_or_zero(int n, int k) const {
  if (n < 0 || n >= n_rows() || k < 0 || k > n) return Rational(0);
  return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

RiordanPair make_pair(Series g, Series f) {
  if (g.valid_to() < 1 || f.valid_to() < 1)
    throw std::domain_error("not a proper Riordan pair: need valid_to >= 1 for g and f");
  if (g[0] == 0) throw std::domain_error("not a proper Riordan pair: g has zero constant term");
  if (f[0] != 0) throw std::domain_error("not a proper Riordan pair: f has nonzero constant term");
  if (f[1] == 0) throw std::domain_error("not a proper Riordan pair: f does not have order exactly 1");
  bool normalized = g[0] == 1;
  return RiordanPair{std::move(g), std::move(f), normalized};
}

Triangle expand_triangle(const RiordanPair& p, int n_rows) {
  if (n_rows < 1) throw std::invalid_argument("need at least one row");
  if (n_rows - 1 > p.valid_to())
    throw std::domain_error("truncation too short for " + std::to_string(n_rows) + " rows");
  int n = n_rows - 1;
  Triangle t;
  t.rows.resize(static_cast<size_t>(n_rows));
  for (int r = 0; r < n_rows; ++r) t.rows[static_cast<size_t>(r)].resize(static_cast<size_t>(r) + 1);
  Series col = p.g.truncated(n);
  Series f = p.f.truncated(n);
  for (int k = 0; k <= n; ++k) {
    for (int r = k; r <= n; ++r) t.rows[static_cast<size_t>(r)][static_cast<size_t>(k)] = col[r];
    if (k < n) col = mul(col, f);
  }
  return t;
}

Series apply_to_series(const RiordanPair& p, const Series& h) {
  return mul(p.g, compose(h, p.f));
}

RiordanPair multiply_pairs(const RiordanPair& p1, const RiordanPair& p2) {
  Series g3 = mul(p1.g, compose(p2.g, p1.f));
  Series f3 = compose(p2.f, p1.f);
  return make_pair(std::move(g3), std::move(f3));
}

RiordanPair invert_pair(const RiordanPair& p) {
  Series fbar = comp_inverse(p.f);
  Series gstar = reciprocal(compose(p.g, fbar));
  return make_pair(std::move(gstar), std::move(fbar));
}

RiordanPair identity_pair(int valid_to) {
  return make_pair(Series::one(valid_to), Series::identity(valid_to));
}

Triangle triangle_product(const Triangle& a, const Triangle& b) {
  int n = std::min(a.n_rows(), b.n_rows());
  Triangle t;
  t.rows.resize(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    t.rows[static_cast<size_t>(r)].resize(static_cast<size_t>(r) + 1);
    for (int k = 0; k <= r; ++k) {
      Rational s = 0;
      for (int j = k; j <= r; ++j) s += a.at(r, j) * b.at(j, k);
      t.rows[static_cast<size_t>(r)][static_cast<size_t>(k)] = s;
    }
  }
  return t;
}

}  // namespace riordan
