// SPDX-License-Identifier: MIT
//
// Nilpotent orbits of the classical groups SL_n, Sp_2n, Spin_m via
// partitions, plus label plumbing for the exceptional types (where orbits are
// named by Bala-Carter labels and their dimensions/closure order come from
// the bundled reference tables).
//
// Partition conventions: parts weakly decreasing, no zero parts.
//  * A_{n-1} (SL_n): any partition of n.
//  * B_n (Spin_{2n+1}): partition of 2n+1, even parts with even multiplicity.
//  * C_n (Sp_2n): partition of 2n, odd parts with even multiplicity.
//  * D_n (Spin_2n): partition of 2n, even parts with even multiplicity;
//    "very even" partitions (all parts even) label two orbits, tagged I/II.
//
// Closure order on partitions is the dominance order (Gerstenhaber,
// Kraft-Procesi), with the two very even orbits of a common partition
// incomparable.
#pragma once

#include "reederkit/lietype.hpp"
#include "reederkit/rootsystem.hpp"

#include <string>
#include <vector>

namespace reederkit {

enum class VeryEvenTag { None, I, II };

struct OrbitLabel {
  LieType type;
  IVec partition;           // empty for exceptional types
  VeryEvenTag tag = VeryEvenTag::None;
  std::string bala_carter;  // empty for classical types

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

/// Transpose of a partition.
IVec dual_partition(const IVec& p);

/// All partitions of n >= 0, in descending lexicographic order.
std::vector<IVec> partitions_of(int n);

bool is_valid_orbit_partition(const LieType& t, const IVec& p);

/// All parts even (possible only in type D among the valid partitions).
bool is_very_even(const LieType& t, const IVec& p);

/// Validates the partition and the tag (required exactly for very even
/// type D partitions).
OrbitLabel make_classical_orbit(const LieType& t, IVec p,
                                VeryEvenTag tag = VeryEvenTag::None);

OrbitLabel make_exceptional_orbit(const LieType& t, std::string bala_carter);

/// Complex dimension of the orbit.  Classical types use the dual-partition
/// formulas; exceptional labels are looked up in the reference tables.
long long orbit_dimension(const OrbitLabel& o);

/// Closure order.  Classical: dominance of partitions with the very even
/// I/II rule; exceptional: reachability in the bundled Hasse diagram of the
/// small-piece orbits (labels outside it are rejected).
bool closure_leq(const OrbitLabel& a, const OrbitLabel& b);

/// Weighted Dynkin diagram of a classical orbit, as a dominant coweight in
/// classical coordinates: the sorted sl_2 eigenvalue multiset (type A), or
/// its n largest entries (types B/C/D, with the sign of the last coordinate
/// recording the very even tag in type D).
Coweight weighted_dynkin_classical(const OrbitLabel& o);

/// The nilpotent orbits meeting the union of the small-coweight pieces:
/// explicit families for the classical types, the reference-table rows for
/// the exceptional ones.  Sorted by dimension descending, then by label.
std::vector<OrbitLabel> small_orbit_list(const LieType& t);

/// "3^2.1^3", "2^4_I", "A2+A1", ...  (Atilde_1 is written "A1t".)
std::string orbit_display(const OrbitLabel& o);
OrbitLabel parse_orbit(const LieType& t, const std::string& text);

}  // namespace reederkit
