#include "riordan/seq_char.hpp"

#include <algorithm>
#include <stdexcept>

namespace riordan {

Series a_sequence(const RiordanPair& p) {
  Series fbar = comp_inverse(p.f);
  return reciprocal(shift(fbar, -1));
}

Series z_sequence(const RiordanPair& p) {
  if (!p.proper_normalized) throw std::domain_error("Z-sequence requires g(0)=1");
  Series fbar = comp_inverse(p.f);
  Series gf = compose(p.g, fbar);
  Series num = shift(sub(gf, Series::one(gf.valid_to())), -1);
  Series den = mul(shift(fbar, -1), gf);
  return mul(num, reciprocal(den));
}

CharSeqReport a_z_from_triangle(const Triangle& t) {
  int rows = t.n_rows();
  if (rows < 3) throw std::invalid_argument("need at least 3 rows to extract sequences");
  for (int n = 0; n < rows; ++n)
    if (t.at(n, n) == 0) throw std::domain_error("zero diagonal entry at row " + std::to_string(n));

  // Solve a_n from column 1 of row n+1 and z_n from column 0 of row n+1;
  // both systems are triangular with pivot d(n,n).
  int m = rows - 1;  // number of recoverable coefficients
  std::vector<Rational> a(static_cast<size_t>(m)), z(static_cast<size_t>(m));
  for (int n = 0; n < m; ++n) {
    Rational sa = 0, sz = 0;
    for (int j = 0; j < n; ++j) {
      sa += a[static_cast<size_t>(j)] * t.at(n, j);
      sz += z[static_cast<size_t>(j)] * t.at(n, j);
    }
    a[static_cast<size_t>(n)] = (t.at(n + 1, 1) - sa) / t.at(n, n);
    z[static_cast<size_t>(n)] = (t.at(n + 1, 0) - sz) / t.at(n, n);
  }

  CharSeqReport report;
  report.a_seq = Series(a);
  report.z_seq = Series(z);
  report.certified_to = rows - 1;

  // Column-0 and column-1 equations hold by construction; verify the rest.
  for (int n = 1; n < m && report.consistent; ++n) {
    for (int k = 1; k <= n; ++k) {
      Rational s = 0;
      for (int j = 0; k + j <= n; ++j) s += a[static_cast<size_t>(j)] * t.at(n, k + j);
      if (s != t.at(n + 1, k + 1)) {
        report.consistent = false;
        report.witness = {n + 1, k + 1};
        report.certified_to = n;
        break;
      }
    }
  }
  return report;
}

RiordanPair pair_from_a_z(const Series& a, const Series& z) {
  if (a[0] == 0) throw std::domain_error("A-sequence needs a nonzero constant term");
  int la = a.valid_to();
  // f = t A(f): coefficient m depends on f below m only.
  std::vector<Rational> f(static_cast<size_t>(la) + 2, Rational(0));
  f[1] = a[0];
  for (int m = 2; m <= la + 1; ++m) {
    Series partial(std::vector<Rational>(f.begin(), f.begin() + m));
    f[static_cast<size_t>(m)] = compose(a.truncated(m - 1), partial)[m - 1];
  }
  Series fs(std::move(f));
  Series zf = compose(z, fs);
  Series g = reciprocal(sub(Series::one(zf.valid_to() + 1), shift(zf, 1)));
  return make_pair(std::move(g), std::move(fs));
}

namespace {

void enumerate_compositions(int remaining, int parts_left, std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  if (parts_left == 0) return;
  // A tuple with parts_left parts needs at least parts_left total.
  for (int part = 1; part <= remaining - (static_cast<int>(0)); ++part) {
    if (remaining - part < 0) break;
    prefix.push_back(part);
    enumerate_compositions(remaining - part, parts_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

CompositionSet compositions(int n, int max_parts) {
  if (n < 1 || max_parts < 1) throw std::invalid_argument("compositions need n >= 1 and max_parts >= 1");
  CompositionSet set;
  set.n = n;
  set.max_parts = max_parts;
  // Grouped by part count, lexicographic within each count.
  for (int k = 1; k <= std::min(max_parts, n); ++k) {
    std::vector<std::vector<int>> with_k;
    std::vector<int> prefix;
    enumerate_compositions(n, k, prefix, with_k);
    for (auto& tup : with_k)
      if (static_cast<int>(tup.size()) == k) set.tuples.push_back(std::move(tup));
  }
  return set;
}

namespace {

// Sum over compositions of n with at most max_parts parts of
// b(#parts) * prod x(part). Zero parts of x prune the recursion.
Rational composition_sum(int n, int max_parts, const std::function<Rational(int)>& b,
                         const std::function<Rational(int)>& x) {
  Rational total = 0;
  if (n < 1 || max_parts < 1) return total;
  // Depth-first over parts, accumulating the product.
  std::function<void(int, int, const Rational&)> walk = [&](int remaining, int used, const Rational& prod) {
    if (remaining == 0) {
      total += b(used) * prod;
      return;
    }
    if (used == max_parts) return;
    for (int part = 1; part <= remaining; ++part) {
      Rational xv = x(part);
      if (xv == 0) continue;
      walk(remaining - part, used + 1, prod * xv);
    }
  };
  walk(n, 0, Rational(1));
  return total;
}

}  // namespace

BSeqVerdict type1_b_from_a(const Series& a) {
  if (a[0] == 0) throw std::domain_error("A-sequence needs a nonzero constant term");
  BSeqVerdict v;
  v.kind = BKind::TypeI;
  int l = a.valid_to();
  if (a[0] != 1) {
    v.witness_index = 0;
    return v;
  }
  if (l >= 2 && a[2] != 0) {
    v.witness_index = 2;
    return v;
  }
  Series c = reciprocal(a);  // 1/A
  auto ctilde = [&](int j) { return j >= 2 ? c[j - 2] : Rational(0); };

  int bmax = (l - 1) / 2;  // b_l needs a_{2l+1}
  std::vector<Rational> b;
  if (l >= 1) {
    b.resize(static_cast<size_t>(bmax) + 1);
    b[0] = a[1];
    auto bat = [&](int k) { return b[static_cast<size_t>(k)]; };
    for (int el = 1; el <= bmax; ++el)
      b[static_cast<size_t>(el)] = a[2 * el + 1] - composition_sum(2 * el, el - 1, bat, ctilde);
    // Even-index constraints.
    for (int el = 2; 2 * el <= l; ++el) {
      if (a[2 * el] != composition_sum(2 * el - 1, el - 1, bat, ctilde)) {
        v.witness_index = 2 * el;
        return v;
      }
    }
  }
  v.exists = true;
  v.exists_to_order = l;
  if (!b.empty()) v.b_seq = Series(std::move(b));
  return v;
}

BSeqVerdict type1_b_from_f(const Series& f) {
  if (f.order() != 1) throw std::domain_error("f must have order exactly 1");
  BSeqVerdict v;
  v.kind = BKind::TypeI;
  int l = f.valid_to();
  if (f[1] != 1) {
    v.witness_index = 1;
    return v;
  }
  auto ftilde = [&](int j) { return j >= 1 && j - 1 <= l ? f[j - 1] : Rational(0); };

  int bmax = l / 2 - 1;  // b_{el-1} needs f_{2el}
  std::vector<Rational> b;
  if (bmax >= 0) {
    b.resize(static_cast<size_t>(bmax) + 1);
    auto btilde = [&](int k) { return k >= 1 ? b[static_cast<size_t>(k - 1)] : Rational(0); };
    for (int el = 1; el - 1 <= bmax; ++el)
      b[static_cast<size_t>(el - 1)] = f[2 * el] - composition_sum(2 * el, el - 1, btilde, ftilde);
    // Odd-index constraints (el = 1 is the f_3 = f_2^2 condition).
    for (int el = 1; 2 * el + 1 <= l; ++el) {
      if (f[2 * el + 1] != composition_sum(2 * el + 1, el, btilde, ftilde)) {
        v.witness_index = 2 * el + 1;
        return v;
      }
    }
  } else if (l >= 3 && f[3] != f[2] * f[2]) {
    v.witness_index = 3;
    return v;
  }
  v.exists = true;
  v.exists_to_order = l;
  if (!b.empty()) v.b_seq = Series(std::move(b));
  return v;
}

Series compose_to(const Series& outer, const Series& inner, int n) {
  if (n < 0) throw std::invalid_argument("target order must be >= 0");
  if (inner[0] != 0) throw std::domain_error("composition undefined: inner constant term is nonzero");
  if (inner.valid_to() < n) throw std::domain_error("inner series too short for requested order");
  auto ord = inner.truncated(n).order();
  if (!ord.has_value()) return Series::constant(outer[0], n);  // inner vanishes to order n
  if (outer.valid_to() < n && *ord * (outer.valid_to() + 1) <= n)
    throw std::domain_error("outer series too short for requested composition order");
  Series padded_outer = outer.valid_to() >= n ? outer.truncated(n) : outer.padded(n);
  Series in = inner.truncated(n);
  Series acc = Series::constant(padded_outer[n], n);
  for (int j = n - 1; j >= 0; --j) acc = add(mul(acc, in), Series::constant(padded_outer[j], n));
  return acc;
}

BSeqVerdict type1_b_functional(const Series& a) {
  if (a[0] == 0) throw std::domain_error("A-sequence needs a nonzero constant term");
  BSeqVerdict v;
  v.kind = BKind::TypeI;
  int l = a.valid_to();
  if (a[0] != 1) {
    v.witness_index = 0;
    return v;
  }
  Series u = shift(reciprocal(a), 2);  // t^2 / A, order exactly 2
  int bmax = (l - 1) / 2;
  std::vector<Rational> b;
  if (l >= 1) {
    Rational pivot = 1;  // u_2^j with u_2 = 1/a_0 = 1
    for (int j = 0; j <= bmax; ++j) {
      std::vector<Rational> bpad(b.begin(), b.end());
      bpad.resize(static_cast<size_t>(j) + 1, Rational(0));
      Series rhs = shift(compose_to(Series(bpad), u, 2 * j), 1);
      b.push_back((a[2 * j + 1] - rhs[2 * j + 1]) / pivot);
    }
  }
  if (!b.empty()) {
    Series bs(b);
    Series rhs = add(Series::one(l), shift(compose_to(bs, u, l - 1), 1));
    for (int el = 1; 2 * el <= l; ++el) {
      if (a[2 * el] != rhs[2 * el]) {
        v.witness_index = 2 * el;
        return v;
      }
    }
    v.b_seq = std::move(bs);
  } else if (l >= 2 && a[2] != 0) {
    v.witness_index = 2;
    return v;
  }
  v.exists = true;
  v.exists_to_order = l;
  return v;
}

BSeqVerdict type2_b_sums(const RiordanPair& p) {
  Series z = z_sequence(p);
  Series fbar = comp_inverse(p.f);
  BSeqVerdict v;
  v.kind = BKind::TypeII;
  int lz = z.valid_to();
  if (lz >= 1 && z[1] != 0) {
    v.witness_index = 1;
    return v;
  }
  auto fhat = [&](int j) { return j >= 2 && j - 1 <= fbar.valid_to() ? fbar[j - 1] : Rational(0); };
  Rational f1 = p.f[1];

  int bmax = lz / 2;  // bhat_el needs z_{2el}
  std::vector<Rational> b(static_cast<size_t>(bmax) + 1);
  b[0] = z[0];
  auto bat = [&](int k) { return b[static_cast<size_t>(k)]; };
  Rational power = 1;
  for (int el = 1; el <= bmax; ++el) {
    power *= f1;
    b[static_cast<size_t>(el)] = power * (z[2 * el] - composition_sum(2 * el, el - 1, bat, fhat));
  }
  for (int el = 1; 2 * el + 1 <= lz; ++el) {
    if (z[2 * el + 1] != composition_sum(2 * el + 1, el, bat, fhat)) {
      v.witness_index = 2 * el + 1;
      return v;
    }
  }
  v.exists = true;
  v.exists_to_order = lz;
  v.b_seq = Series(std::move(b));
  return v;
}

BSeqVerdict type2_b(const RiordanPair& p) {
  Series z = z_sequence(p);  // also enforces g(0)=1
  Series fbar = comp_inverse(p.f);
  BSeqVerdict v;
  v.kind = BKind::TypeII;
  int lz = z.valid_to();
  if (lz >= 1 && z[1] != 0) {
    v.witness_index = 1;
    return v;
  }
  Series w = shift(fbar, 1);  // t * fbar, order exactly 2
  Rational pivot_base = fbar[1];
  int bmax = lz / 2;
  std::vector<Rational> b;
  b.push_back(z[0]);
  Rational pivot = 1;
  for (int j = 1; j <= bmax; ++j) {
    pivot *= pivot_base;
    std::vector<Rational> bpad(b.begin(), b.end());
    bpad.resize(static_cast<size_t>(j) + 1, Rational(0));
    Series rhs = compose_to(Series(bpad), w, 2 * j);
    b.push_back((z[2 * j] - rhs[2 * j]) / pivot);
  }
  Series bs(b);
  Series rhs = compose_to(bs, w, lz);
  for (int el = 1; 2 * el + 1 <= lz; ++el) {
    if (z[2 * el + 1] != rhs[2 * el + 1]) {
      v.witness_index = 2 * el + 1;
      return v;
    }
  }
  v.exists = true;
  v.exists_to_order = lz;
  v.b_seq = std::move(bs);

  BSeqVerdict sums = type2_b_sums(p);
  if (sums.exists != v.exists || (v.exists && !agree(*v.b_seq, *sums.b_seq)))
    throw std::logic_error("type-II B-sequence routes disagree");
  return v;
}

RecurrenceCheck verify_b_recurrence(const Triangle& t, const Series& b, BKind kind) {
  RecurrenceCheck r;
  int rows = t.n_rows();
  for (int n = 0; n + 1 < rows; ++n) {
    int kmin = kind == BKind::TypeI ? 1 : 0;
    int kmax = kind == BKind::TypeI ? n + 1 : 0;
    bool row_checkable = true;
    for (int k = kmin; k <= kmax; ++k) {
      // Entries d(n-j, k+j) below the diagonal need k+j <= n-j; above the
      // diagonal (k > n) the sum is empty.
      int jmax = k > n ? -1 : (n - k) / 2;
      if (jmax > b.valid_to()) {
        row_checkable = false;
        continue;
      }
      Rational s = kind == BKind::TypeI ? t.at_or_zero(n, k - 1) : Rational(0);
      for (int j = 0; j <= jmax; ++j) s += b[j] * t.at(n - j, k + j);
      if (s != t.at(n + 1, k)) {
        r.ok = false;
        r.witness = {n + 1, k};
        return r;
      }
    }
    if (row_checkable) r.deepest_row = n + 1;
  }
  return r;
}

BellReport bell_b_equivalence(const RiordanPair& p) {
  if (!p.proper_normalized) throw std::domain_error("Bell equivalence check requires g(0)=1");
  BellReport report;
  Series tg = shift(p.g, 1);
  report.bell_witness = first_disagreement(p.f, tg);
  report.is_bell = !report.bell_witness.has_value();
  report.type1 = type1_b_from_f(p.f);
  report.type2 = type2_b(p);
  bool both = report.type1.exists && report.type2.exists;
  bool equal = both && agree(*report.type1.b_seq, *report.type2.b_seq);
  if (report.is_bell) {
    report.proposition_holds = equal || (!report.type1.exists && !report.type2.exists);
  } else {
    report.contradiction = equal;
    report.proposition_holds = !report.contradiction;
  }
  return report;
}

}  // namespace riordan
