#ifndef RIORDAN_CATALOG_HPP
#define RIORDAN_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "riordan/pair.hpp"

namespace riordan {

/// Generating function counting RNA secondary structures:
/// (1 - t + t^2 - sqrt(1 - 2t - t^2 - 2t^3 + t^4)) / (2 t^2).
/// Computed both from the closed form and from the quadratic identity
/// (1 - t + t^2) g = 1 + t^2 g^2; the two routes must agree exactly.
Series rna_g(int order);

struct CatalogEntry {
  std::string name;
  bool takes_param = false;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Built-in named pairs. gen_pascal takes the rational parameter k; the
/// other entries ignore params. Throws std::invalid_argument for an
/// unknown name, listing the valid ones.
RiordanPair named_pair(const std::string& name, const std::optional<Rational>& param, int order);

/// Checks the two first-column laws of the shifted RNA matrix
/// (d(t), t g(t)): d(n+1,0) = d(n,0) + d(n,1) and the convolution
/// producing column 1 from the structure counts.
struct FirstColumnLawReport {
  bool additive_law = true;       // d(n+1,0) = d(n,0) + d(n,1)
  bool convolution_law = true;    // d(m,1) = sum_j g_j g_{m-j}, j >= 1
  int checked_to = 0;
  std::optional<int> witness_row;
};

FirstColumnLawReport rna_first_column_law(int order);

}  // namespace riordan

#endif
