#ifndef RIORDAN_SERIES_HPP
#define RIORDAN_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Truncated formal power series over the rationals. A Series stores the
/// coefficients of t^0 .. t^valid_to and nothing beyond; valid_to is the
/// highest power whose coefficient is trustworthy. Every operation
/// propagates the tightest valid_to it can certify (binary operations take
/// the minimum of the operands'). Values are immutable after construction.
class Series {
 public:
  /// The zero series valid to order 0.
  Series() : coeffs_(1, Rational(0)) {}

  /// coeffs[j] is the coefficient of t^j; valid_to = coeffs.size() - 1.
  explicit Series(std::vector<Rational> coeffs);

  static Series zero(int valid_to);
  static Series one(int valid_to);
  static Series constant(const Rational& c, int valid_to);
  /// The series t; requires valid_to >= 1.
  static Series identity(int valid_to);
  /// 1/(1 - c t) truncated at valid_to.
  static Series geometric(const Rational& c, int valid_to);

  int valid_to() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of t^j; throws std::out_of_range for j > valid_to.
  const Rational& operator[](int j) const;

  /// Coefficient of t^j, reading 0 beyond valid_to. Only meaningful where
  /// the caller knows the tail vanishes (e.g. polynomials).
  Rational coeff_or_zero(int j) const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Order of the series within its valid window: the least r with a
  /// nonzero coefficient, or nullopt if all stored coefficients vanish
  /// (the truncation cannot distinguish 0 from order > valid_to).
  std::optional<int> order() const;

  /// Copy truncated to a smaller valid_to.
  Series truncated(int new_valid_to) const;

  /// Copy extended with zero coefficients up to new_valid_to. This asserts
  /// knowledge the truncation does not carry; use only for exact
  /// polynomials whose tail is genuinely zero.
  Series padded(int new_valid_to) const;

  bool operator==(const Series& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// True when a and b agree coefficientwise on their joint valid prefix.
bool agree(const Series& a, const Series& b);
/// First index in the joint valid prefix where a and b differ, or nullopt.
std::optional<int> first_disagreement(const Series& a, const Series& b);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
/// Cauchy product truncated at min(a.valid_to, b.valid_to).
Series mul(const Series& a, const Series& b);
Series scale(const Rational& c, const Series& a);

/// Multiplicative inverse; requires a nonzero constant term.
Series reciprocal(const Series& a);

/// outer(inner) for inner of order >= 1 (zero constant term required).
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse of a series of order exactly 1; the result r
/// satisfies compose(f, r) = compose(r, f) = t up to the valid order.
Series comp_inverse(const Series& f);

/// Square root with constant term 1 (the branch with r(0) = 1).
Series sqrt_one(const Series& a);

/// Multiplies by t^k (k > 0) or divides by t^{|k|} (k < 0). Division
/// requires the low-order coefficients to vanish.
Series shift(const Series& a, int k);

/// Term-wise derivative; valid_to drops by one.
Series derivative(const Series& a);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);

}  // namespace riordan

#endif
