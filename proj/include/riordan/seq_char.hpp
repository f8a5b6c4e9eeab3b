#ifndef RIORDAN_SEQ_CHAR_HPP
#define RIORDAN_SEQ_CHAR_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "riordan/pair.hpp"

namespace riordan {

/// A-sequence of the pair: the unique A with f = t A(f), computed as t/fbar.
/// Valid to f.valid_to() - 1.
Series a_sequence(const RiordanPair& p);

/// Z-sequence of the pair: g = 1/(1 - t Z(f)). Requires g(0) = 1.
Series z_sequence(const RiordanPair& p);

/// A- and Z-sequences recovered from a stored triangle, with every stored
/// entry verified against the defining recurrences.
struct CharSeqReport {
  Series a_seq;
  Series z_seq;
  int certified_to = 0;  // deepest row verified against the recurrences
  bool consistent = true;
  std::optional<std::pair<int, int>> witness;  // first entry violating them
};

/// Requires at least 3 rows and nonzero diagonal entries.
CharSeqReport a_z_from_triangle(const Triangle& t);

/// Rebuilds the pair from its A- and Z-sequences: f solves f = t A(f)
/// (one coefficient above a's validity), g = 1/(1 - t Z(f)).
RiordanPair pair_from_a_z(const Series& a, const Series& z);

/// The set of compositions of n with between 1 and max_parts parts,
/// in deterministic order (by part count, then lexicographic).
struct CompositionSet {
  int n = 0;
  int max_parts = 0;
  std::vector<std::vector<int>> tuples;
};

CompositionSet compositions(int n, int max_parts);

enum class BKind { TypeI, TypeII };

/// Existence verdict for a B-sequence at finite truncation. A negative
/// verdict pins a violated constraint at witness_index and is definitive;
/// a positive verdict certifies consistency through exists_to_order only.
struct BSeqVerdict {
  BKind kind = BKind::TypeI;
  bool exists = false;
  int exists_to_order = 0;   // meaningful when exists
  int witness_index = -1;    // coefficient index of the first violation
  std::optional<Series> b_seq;
};

/// Type-I B-sequence from the A-sequence alone: b_l read off the odd
/// coefficients by composition sums over 1/A, even coefficients checked
/// as constraints. Necessary conditions a_0 = 1, a_2 = 0.
BSeqVerdict type1_b_from_a(const Series& a);

/// Type-I B-sequence from f directly: b_l read off the even coefficients
/// of f, odd coefficients checked. Necessary conditions f_1 = 1, f_3 = f_2^2.
BSeqVerdict type1_b_from_f(const Series& f);

/// Type-I B-sequence by solving A(t) = 1 + t B(t^2/A(t)) coefficientwise.
BSeqVerdict type1_b_functional(const Series& a);

/// Type-II B-sequence: solves Z(t) = Bhat(t fbar(t)) coefficientwise and
/// cross-checks the explicit composition-sum formulas. Requires g(0) = 1;
/// existence needs z_1 = 0.
BSeqVerdict type2_b(const RiordanPair& p);

/// Type-II B-sequence by the explicit composition sums over fbar.
BSeqVerdict type2_b_sums(const RiordanPair& p);

/// Entry-level check of the defining recurrences against a stored triangle.
struct RecurrenceCheck {
  bool ok = true;
  int deepest_row = 0;  // deepest row whose checkable entries all verified
  std::optional<std::pair<int, int>> witness;
};

RecurrenceCheck verify_b_recurrence(const Triangle& t, const Series& b, BKind kind);

/// Bell membership (f = t g) against the two B-sequence verdicts: a Bell
/// pair must have both B-sequences equal or neither.
struct BellReport {
  bool is_bell = false;
  std::optional<int> bell_witness;  // first coefficient where f != t*g
  BSeqVerdict type1;
  BSeqVerdict type2;
  bool proposition_holds = true;
  bool contradiction = false;  // non-Bell pair with equal existing B-sequences
};

BellReport bell_b_equivalence(const RiordanPair& p);

/// outer(inner) truncated at order n, valid whenever the coefficients of
/// outer beyond its validity cannot reach t^n (inner order * known outer
/// length exceeds n). Used where inner has order >= 2.
Series compose_to(const Series& outer, const Series& inner, int n);

}  // namespace riordan

#endif
