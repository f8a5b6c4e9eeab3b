#include "riordan/catalog.hpp"

#include <stdexcept>

namespace riordan {

namespace {

Series polynomial(std::initializer_list<int> coeffs, int valid_to) {
  std::vector<Rational> v(static_cast<size_t>(valid_to) + 1, Rational(0));
  int j = 0;
  for (int c : coeffs) v[static_cast<size_t>(j++)] = c;
  return Series(std::move(v));
}

// Quadratic-identity route: (1 - t + t^2) g = 1 + t^2 g^2 with g(0) = 1.
Series rna_g_quadratic(int order) {
  std::vector<Rational> g(static_cast<size_t>(order) + 1);
  g[0] = 1;
  if (order >= 1) g[1] = 1;
  for (int n = 2; n <= order; ++n) {
    Rational conv = 0;
    for (int i = 0; i <= n - 2; ++i) conv += g[static_cast<size_t>(i)] * g[static_cast<size_t>(n - 2 - i)];
    g[static_cast<size_t>(n)] = g[static_cast<size_t>(n - 1)] - g[static_cast<size_t>(n - 2)] + conv;
  }
  return Series(std::move(g));
}

// Closed-form route through the square root.
Series rna_g_closed(int order) {
  Series radicand = polynomial({1, -2, -1, -2, 1}, order + 2);
  Series num = sub(polynomial({1, -1, 1}, order + 2), sqrt_one(radicand));
  return scale(Rational(1, 2), shift(num, -2));
}

}  // namespace

Series rna_g(int order) {
  if (order < 2) throw std::invalid_argument("rna_g needs order >= 2");
  Series g = rna_g_quadratic(order);
  if (g != rna_g_closed(order)) throw std::logic_error("RNA generating function routes disagree");
  return g;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"identity", false, "identity matrix (1, t)"},
      {"negation_M", false, "M = (1, -t)"},
      {"pascal", false, "Pascal matrix (1/(1-t), t/(1-t))"},
      {"gen_pascal", true, "generalized Pascal (1/(1-kt), t/(1-kt))"},
      {"rna_R", false, "RNA type matrix ((1-t)g/(1-tg), tg)"},
      {"rna_Rstar", false, "RNA matrix (g, tg)"},
      {"rna_Rstarstar", false, "shifted RNA matrix ((g-1)/t, tg)"},
      {"catalan_C0", false, "aerated Catalan pair (C(t^2), tC(t^2))"},
      {"appell_A0", false, "Appell pair (1/(1-t), t)"},
      {"ex31_a", false, "(1/(1-2t), t/(1-t)), distinct type-I and type-II B-sequences"},
      {"ex31_b", false, "(1/(1-2t-t^2f), f) with f from 1-t-sqrt(1-2t+t^2-4t^3) over 2t^2"},
  };
  return entries;
}

RiordanPair named_pair(const std::string& name, const std::optional<Rational>& param, int order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  if (name == "identity") return identity_pair(order);
  if (name == "negation_M") {
    std::vector<Rational> f(static_cast<size_t>(order) + 1, Rational(0));
    f[1] = -1;
    return make_pair(Series::one(order), Series(std::move(f)));
  }
  if (name == "pascal")
    return make_pair(Series::geometric(Rational(1), order),
                     shift(Series::geometric(Rational(1), order), 1).truncated(order));
  if (name == "gen_pascal") {
    Rational k = param.value_or(Rational(1));
    return make_pair(Series::geometric(k, order),
                     shift(Series::geometric(k, order), 1).truncated(order));
  }
  if (name == "rna_R") {
    Series g = rna_g(order + 1);
    Series tg = shift(g, 1).truncated(order + 1);
    Series one = Series::one(order + 1);
    Series gr = mul(mul(sub(one, Series::identity(order + 1)), g), reciprocal(sub(one, tg)));
    return make_pair(gr.truncated(order), tg.truncated(order));
  }
  if (name == "rna_Rstar") {
    Series g = rna_g(order);
    return make_pair(g, shift(g, 1).truncated(order));
  }
  if (name == "rna_Rstarstar") {
    Series g = rna_g(order + 1);
    Series d = shift(sub(g, Series::one(order + 1)), -1);
    return make_pair(d, shift(g, 1).truncated(order));
  }
  if (name == "catalan_C0") {
    // C(t^2) = (1 - sqrt(1 - 4 t^2)) / (2 t^2).
    std::vector<Rational> rad(static_cast<size_t>(order) + 3, Rational(0));
    rad[0] = 1;
    rad[2] = -4;
    Series c2 = scale(Rational(1, 2), shift(sub(Series::one(order + 2), sqrt_one(Series(rad))), -2));
    return make_pair(c2.truncated(order), shift(c2, 1).truncated(order));
  }
  if (name == "appell_A0")
    return make_pair(Series::geometric(Rational(1), order), Series::identity(order));
  if (name == "ex31_a")
    return make_pair(Series::geometric(Rational(2), order),
                     shift(Series::geometric(Rational(1), order), 1).truncated(order));
  if (name == "ex31_b") {
    // f = (1 - t - sqrt(1 - 2t + t^2 - 4t^3)) / (2 t^2), which satisfies
    // t^2 f^2 - (1 - t) f + t = 0.
    Series radicand = polynomial({1, -2, 1, -4}, order + 2);
    Series num = sub(polynomial({1, -1}, order + 2), sqrt_one(radicand));
    Series f = scale(Rational(1, 2), shift(num, -2));
    int l = f.valid_to();
    Series t2f2 = shift(mul(f, f), 2).truncated(l);
    Series quad = add(sub(t2f2, mul(polynomial({1, -1}, l), f)), Series::identity(l));
    if (!agree(quad, Series::zero(l)))
      throw std::logic_error("ex31_b closed form fails its defining quadratic");
    // g solves g = 1 + t g (2 + t f), i.e. g = 1/(1 - 2t - t^2 f).
    Series den = sub(Series::one(l),
                     add(scale(Rational(2), Series::identity(l)), shift(f, 2).truncated(l)));
    Series g = reciprocal(den);
    return make_pair(g.truncated(order), f.truncated(order));
  }
  std::string valid;
  for (const auto& e : catalog_entries()) valid += (valid.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown catalog name '" + name + "'; valid names: " + valid);
}

FirstColumnLawReport rna_first_column_law(int order) {
  if (order < 3) throw std::invalid_argument("need order >= 3");
  FirstColumnLawReport report;
  report.checked_to = order;
  RiordanPair p = named_pair("rna_Rstarstar", std::nullopt, order + 1);
  Triangle t = expand_triangle(p, order + 1);
  Series g = rna_g(order + 1);
  for (int n = 1; n <= order; ++n) {
    if (n + 1 <= order && t.at(n + 1, 0) != t.at(n, 0) + t.at(n, 1)) {
      report.additive_law = false;
      report.witness_row = n + 1;
      break;
    }
    Rational conv = 0;
    for (int j = 1; j <= n; ++j) conv += g[j] * g[n - j];
    if (t.at(n, 1) != conv) {
      report.convolution_law = false;
      report.witness_row = n;
      break;
    }
  }
  return report;
}

}  // namespace riordan
