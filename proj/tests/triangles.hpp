#ifndef RIORDAN_TESTS_TRIANGLES_HPP
#define RIORDAN_TESTS_TRIANGLES_HPP

#include <initializer_list>

#include "riordan/pair.hpp"

namespace riordan::test {

inline Triangle make_triangle(std::initializer_list<std::initializer_list<int>> rows) {
  Triangle t;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (int x : row) r.emplace_back(x);
    t.rows.push_back(std::move(r));
  }
  return t;
}

// The three published RNA triangles, seven rows each.
inline Triangle rna_R_rows() {
  return make_triangle({{1},
                        {1, 1},
                        {2, 2, 1},
                        {5, 4, 3, 1},
                        {12, 10, 7, 4, 1},
                        {29, 25, 18, 11, 5, 1},
                        {71, 62, 47, 30, 16, 6, 1}});
}

inline Triangle rna_Rstar_rows() {
  return make_triangle({{1},
                        {1, 1},
                        {1, 2, 1},
                        {2, 3, 3, 1},
                        {4, 6, 6, 4, 1},
                        {8, 13, 13, 10, 5, 1},
                        {17, 28, 30, 24, 15, 6, 1}});
}

inline Triangle rna_Rstarstar_rows() {
  return make_triangle({{1},
                        {1, 1},
                        {2, 2, 1},
                        {4, 4, 3, 1},
                        {8, 9, 7, 4, 1},
                        {17, 20, 17, 11, 5, 1},
                        {37, 45, 41, 29, 16, 6, 1}});
}

inline Triangle pascal_rows() {
  return make_triangle({{1},
                        {1, 1},
                        {1, 2, 1},
                        {1, 3, 3, 1},
                        {1, 4, 6, 4, 1},
                        {1, 5, 10, 10, 5, 1},
                        {1, 6, 15, 20, 15, 6, 1}});
}

inline Triangle truncate_rows(const Triangle& t, int n_rows) {
  Triangle out;
  out.rows.assign(t.rows.begin(), t.rows.begin() + n_rows);
  return out;
}

}  // namespace riordan::test

#endif
