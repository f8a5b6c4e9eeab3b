#include "riordan/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace riordan {

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least the t^0 coefficient");
}

Series Series::zero(int valid_to) {
  if (valid_to < 0) throw std::invalid_argument("valid_to must be >= 0");
  return Series(std::vector<Rational>(valid_to + 1, Rational(0)));
}

Series Series::one(int valid_to) { return constant(Rational(1), valid_to); }

Series Series::constant(const Rational& c, int valid_to) {
  if (valid_to < 0) throw std::invalid_argument("valid_to must be >= 0");
  std::vector<Rational> v(valid_to + 1, Rational(0));
  v[0] = c;
  return Series(std::move(v));
}

Series Series::identity(int valid_to) {
  if (valid_to < 1) throw std::invalid_argument("the series t needs valid_to >= 1");
  std::vector<Rational> v(valid_to + 1, Rational(0));
  v[1] = 1;
  return Series(std::move(v));
}

Series Series::geometric(const Rational& c, int valid_to) {
  if (valid_to < 0) throw std::invalid_argument("valid_to must be >= 0");
  std::vector<Rational> v(valid_to + 1);
  v[0] = 1;
  for (int j = 1; j <= valid_to; ++j) v[j] = v[j - 1] * c;
  return Series(std::move(v));
}

const Rational& Series::operator[](int j) const {
  if (j < 0 || j > valid_to()) throw std::out_of_range("series coefficient index out of valid range");
  return coeffs_[static_cast<size_t>(j)];
}

Rational Series::coeff_or_zero(int j) const {
  if (j < 0 || j > valid_to()) return Rational(0);
  return coeffs_[static_cast<size_t>(j)];
}

std::optional<int> Series::order() const {
  for (int j = 0; j <= valid_to(); ++j)
    if (coeffs_[static_cast<size_t>(j)] != 0) return j;
  return std::nullopt;
}

Series Series::truncated(int new_valid_to) const {
  if (new_valid_to < 0 || new_valid_to > valid_to())
    throw std::invalid_argument("truncation order out of range");
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_valid_to + 1));
}

Series Series::padded(int new_valid_to) const {
  if (new_valid_to < valid_to()) throw std::invalid_argument("padding cannot shrink a series");
  std::vector<Rational> v = coeffs_;
  v.resize(static_cast<size_t>(new_valid_to) + 1, Rational(0));
  return Series(std::move(v));
}

bool agree(const Series& a, const Series& b) { return !first_disagreement(a, b).has_value(); }

std::optional<int> first_disagreement(const Series& a, const Series& b) {
  int n = std::min(a.valid_to(), b.valid_to());
  for (int j = 0; j <= n; ++j)
    if (a[j] != b[j]) return j;
  return std::nullopt;
}

Series add(const Series& a, const Series& b) {
  int n = std::min(a.valid_to(), b.valid_to());
  std::vector<Rational> v(n + 1);
  for (int j = 0; j <= n; ++j) v[j] = a[j] + b[j];
  return Series(std::move(v));
}

Series sub(const Series& a, const Series& b) {
  int n = std::min(a.valid_to(), b.valid_to());
  std::vector<Rational> v(n + 1);
  for (int j = 0; j <= n; ++j) v[j] = a[j] - b[j];
  return Series(std::move(v));
}

Series neg(const Series& a) { return scale(Rational(-1), a); }

Series mul(const Series& a, const Series& b) {
  int n = std::min(a.valid_to(), b.valid_to());
  std::vector<Rational> v(n + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      v[i + j] += a[i] * b[j];
    }
  }
  return Series(std::move(v));
}

Series scale(const Rational& c, const Series& a) {
  std::vector<Rational> v(a.coeffs());
  for (auto& x : v) x *= c;
  return Series(std::move(v));
}

Series reciprocal(const Series& a) {
  if (a[0] == 0) throw std::domain_error("not invertible: zero constant term");
  int n = a.valid_to();
  std::vector<Rational> c(n + 1);
  c[0] = 1 / a[0];
  for (int j = 1; j <= n; ++j) {
    Rational s = 0;
    for (int k = 1; k <= j; ++k) s += a[k] * c[j - k];
    c[j] = -s / a[0];
  }
  return Series(std::move(c));
}

Series compose(const Series& outer, const Series& inner) {
  if (inner[0] != 0) throw std::domain_error("composition undefined: inner constant term is nonzero");
  int n = std::min(outer.valid_to(), inner.valid_to());
  Series in = inner.truncated(n);
  // Horner evaluation, truncating at order n throughout.
  Series acc = Series::constant(outer[n], n);
  for (int j = n - 1; j >= 0; --j) acc = add(mul(acc, in), Series::constant(outer[j], n));
  return acc;
}

Series comp_inverse(const Series& f) {
  if (f.order() != 1) throw std::domain_error("no compositional inverse: order is not exactly 1");
  int n = f.valid_to();
  std::vector<Rational> r(n + 1, Rational(0));
  r[1] = 1 / f[1];
  // Solve compose(f, r) = t one coefficient at a time; the unknown r[m]
  // enters [t^m] f(r) linearly with pivot f[1].
  for (int m = 2; m <= n; ++m) {
    Series partial(std::vector<Rational>(r.begin(), r.begin() + m + 1));
    Rational excess = compose(f.truncated(m), partial)[m];
    r[static_cast<size_t>(m)] = -excess / f[1];
  }
  return Series(std::move(r));
}

Series sqrt_one(const Series& a) {
  if (a[0] != 1) throw std::domain_error("sqrt unsupported: constant term is not 1");
  int n = a.valid_to();
  std::vector<Rational> r(n + 1);
  r[0] = 1;
  for (int j = 1; j <= n; ++j) {
    Rational s = 0;
    for (int k = 1; k < j; ++k) s += r[k] * r[j - k];
    r[j] = (a[j] - s) / 2;
  }
  return Series(std::move(r));
}

Series shift(const Series& a, int k) {
  if (k == 0) return a;
  if (k > 0) {
    std::vector<Rational> v(static_cast<size_t>(a.valid_to() + k) + 1, Rational(0));
    for (int j = 0; j <= a.valid_to(); ++j) v[static_cast<size_t>(j + k)] = a[j];
    return Series(std::move(v));
  }
  int d = -k;
  if (a.valid_to() < d) throw std::domain_error("not divisible by t^" + std::to_string(d) + ": series too short");
  for (int j = 0; j < d; ++j)
    if (a[j] != 0) throw std::domain_error("not divisible by t^" + std::to_string(d));
  return Series(std::vector<Rational>(a.coeffs().begin() + d, a.coeffs().end()));
}

Series derivative(const Series& a) {
  if (a.valid_to() == 0) return Series::zero(0);
  std::vector<Rational> v(static_cast<size_t>(a.valid_to()), Rational(0));
  for (int j = 1; j <= a.valid_to(); ++j) v[static_cast<size_t>(j - 1)] = Rational(j) * a[j];
  return Series(std::move(v));
}

Series operator+(const Series& a, const Series& b) { return add(a, b); }
Series operator-(const Series& a, const Series& b) { return sub(a, b); }
Series operator-(const Series& a) { return neg(a); }
Series operator*(const Series& a, const Series& b) { return mul(a, b); }
Series operator*(const Rational& c, const Series& a) { return scale(c, a); }

}  // namespace riordan
