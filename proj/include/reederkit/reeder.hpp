// SPDX-License-Identifier: MIT
//
// Small coweights and their nilpotent pieces.
//
// A dominant coweight lambda of the simply connected group G is "small" when
// it is not >= twice the dominant short coroot of maximal height; the small
// coweights form a finite lower ideal of the dominance order.  Each small
// lambda carries a "piece": the nilpotent orbits met by the corresponding
// locus of the affine Grassmannian under the projection to the nilpotent
// cone.  For the classical groups the pieces follow closed-form partition
// rules; for the exceptional groups they are computed by restricting along a
// bundled embedding of a classical (or unfolded) partner group and saturating
// the partner's pieces, with the correspondence data shipped in the reference
// tables.
#pragma once

#include "reederkit/lietype.hpp"
#include "reederkit/numeric.hpp"
#include "reederkit/orbits.hpp"
#include "reederkit/rootsystem.hpp"

#include <map>
#include <utility>
#include <vector>

namespace reederkit {

/// Dominant, in the coroot lattice, and not >= 2 * (dominant short coroot of
/// maximal height).
bool is_small(const RootDatum& rd, const IVec& fund);

/// All small dominant coweights, fundamental coordinates, enumerated by an
/// upward closure walk (complete because covers in the dominance order on
/// dominant coweights differ by a positive coroot).  Throws for ranks above
/// max_rank as a safety valve.
std::vector<IVec> enumerate_small(const LieType& t, int max_rank = 12);

/// Number of small coweights predicted by the closed-form counts
/// (classical types only): A_n: 2 p(n+1) - floor((n+1)/2) - 1;
/// B_n, C_n: n + 1; D_n: n + 2.
long long small_count_closed_form(const LieType& t);

struct SmallPoset {
  LieType t{Family::A, 1};
  std::vector<IVec> nodes;        // sorted by <.,2rho> descending, then lex
  std::vector<long long> dims;    // <node, 2rho>
  std::vector<std::pair<int, int>> covers;  // (upper, lower) indices
  std::vector<int> dual;          // index of -w0(node)
};

SmallPoset small_poset(const LieType& t, int max_rank = 12);

struct ReederPiece {
  IVec lam;                        // dominant small coweight, fund coords
  bool self_dual = false;          // lam == -w0(lam)
  std::vector<OrbitLabel> orbits;  // one orbit, or two with the open one first
};

/// The piece at a small dominant coweight.  Classical types use the partition
/// rules; exceptional types restrict along the bundled partner embedding.
ReederPiece reeder_piece(const LieType& t, const IVec& lam_fund);

// -- Partner embeddings (exceptional types) -----------------------------------

/// The bundled partner: A5 < E6, D6 < E7, D8 < E8 (maximal classical
/// subgroups through the extended diagram), and the unfolded partners
/// E6 > F4, D4 > G2.
LieType restriction_partner(const LieType& g);

/// Image in G of a coweight of the classical partner H < G (types E only),
/// returned in G fundamental coordinates (not necessarily dominant).
IVec embed_partner_coweight(const LieType& g, const IVec& h_fund);

/// Sigma-invariant image in the unfolded partner H > G of a G-coweight
/// (types F4/G2 only), in H fundamental coordinates; dominant coweights map
/// to dominant images.
IVec unfold_coweight(const LieType& g, const IVec& g_fund);

struct SmallRestriction {
  // small dominant G-coweight -> the dominant H-small coweights whose image
  // dominantizes to it (sorted lexicographically)
  std::map<IVec, std::vector<IVec>> cells;
  // H-small coweights landing on non-small G-coweights
  std::vector<IVec> outside;
};

/// Restriction of the partner's small coweights along the embedding
/// (types E only).
SmallRestriction restrict_small(const LieType& g);

/// Right-hand sides of the fixed-point counting identity for the top
/// coweight top_lam of an E-type G: for each orbit C of the partner's small
/// pieces, the count sums the multiplicity of the embedded source coweight
/// as a weight of V_{top_lam} over the sources of the piece containing C,
/// with the open orbit of a double piece counting twice.
std::map<OrbitLabel, Int> stalk_fixed_point_counts(const LieType& g, const IVec& top_lam);

}  // namespace reederkit
