#ifndef RIORDAN_GROUP_OPS_HPP
#define RIORDAN_GROUP_OPS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "riordan/seq_char.hpp"

namespace riordan {

enum class SubgroupId {
  Appell,
  Lagrange,
  Bell,
  HittingTime,
  Derivative,
  Checkerboard,
  R02,
  R111,
};

std::string subgroup_name(SubgroupId s);
std::optional<SubgroupId> subgroup_from_name(const std::string& name);

/// A-sequence of a product from the factors' A-sequences:
/// A3(t) = A2(t) A1(t / A2(t)).
Series product_a(const Series& a1, const Series& a2);

/// Z-sequence of a product from the factors' A- and Z-sequences:
/// Z3(t) = (1 - (t/A2) Z2(t)) Z1(t/A2) + A1(t/A2) Z2(t).
Series product_z(const Series& a1, const Series& z1, const Series& a2, const Series& z2);

/// A-sequence of the inverse, solving Astar(t/A(t)) = 1/A(t).
Series inverse_a(const Series& a);

/// Z-sequence of the inverse, solving Zstar(t/A(t)) = Z(t)/(t Z(t) - A(t)).
Series inverse_z(const Series& a, const Series& z);

/// Both sides of the product identity relating B3 of a product to the
/// factors' B-sequences, evaluated as series. Existence of B1 and B2 does
/// not force B3 to exist; when it does not, the left-hand side is read as
/// the composite (A3 - 1)/t that B3(t^2/A3) would equal.
struct ProductBReport {
  bool hypothesis_met = false;  // both factors have type-I B-sequences
  bool product_has_b = false;   // the product also has one
  int agree_to = -1;            // order through which the two sides match
  bool holds = false;           // no disagreement within the joint validity
};

ProductBReport product_b_identity_check(const RiordanPair& p1, const RiordanPair& p2);

/// Subgroup membership decided to truncation order, with the first
/// violated coefficient index as witness.
struct MembershipResult {
  bool member = false;
  int checked_to = 0;
  int witness = -1;  // coefficient index when not a member
};

MembershipResult is_member(const RiordanPair& p, SubgroupId s);

/// Deterministic pseudo-random pair satisfying the predicate, built by
/// construction (no rejection sampling). Supported: R02, R111, Bell,
/// Appell, Lagrange, Checkerboard.
RiordanPair random_member(SubgroupId s, std::uint64_t seed, int order);

/// Generic random proper normalized pair (small rational coefficients,
/// f_1 = 1) for property harnesses.
RiordanPair random_pair(std::uint64_t seed, int order);

}  // namespace riordan

#endif
