// SPDX-License-Identifier: MIT
//
// Root data for simple, simply connected groups G, with the coweight lattice
// identified with the coroot lattice.
//
// Conventions (fixed once, used everywhere):
//  * Simple roots follow the Bourbaki numbering.  In type E the branch node
//    is 2 and the long chain is 1-3-4-5-6(-7(-8)); in type D the fork is
//    {n-1, n}; in type F_4 nodes 1,2 are long; in type G_2 node 1 is short.
//  * cartan[i][j] = <alpha_i, alphacheck_j>, the value of the i-th simple
//    root on the j-th simple coroot.  Consequently the fundamental
//    coordinates of the simple coroot alphacheck_j form column j of cartan.
//  * A coweight xi is stored through its fundamental coordinates
//    f_i(xi) = <alpha_i, xi>; the simple reflection s_j acts by
//    f |-> f - f_j * column_j(cartan).
//  * Roots are stored in simple-root coordinates; coroots in simple-coroot
//    coordinates.
//  * coroot_norm[j] = (alphacheck_j, alphacheck_j)/2 for the W-invariant
//    symmetric form normalized so short coroots have squared length 2.
//    For a coweight xi and a coroot beta (coroot coords b) this gives the
//    integer pairing (xi, beta) = sum_j coroot_norm[j] * f_j(xi) * b_j.
//
// "Classical coordinates" are the usual Euclidean ones: A_n uses n+1 integers
// summing to zero; B_n/C_n/D_n use n integers (a_1,...,a_n).  The coroot
// lattice is cut out by sum(a) = 0 (type A) resp. sum(a) even (types B, D);
// in type C it is all of Z^n.
#pragma once

#include "reederkit/lietype.hpp"
#include "reederkit/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace reederkit {

enum class Basis { Fundamental, Coroot, Classical };

struct Coweight {
  LieType type;
  Basis basis;
  IVec coords;

  friend bool operator==(const Coweight&, const Coweight&) = default;
};

struct RootDatum {
  LieType type;
  int rank = 0;
  IMat cartan;              // cartan[i][j] = <alpha_i, alphacheck_j>
  QMat cartan_inv;          // exact inverse
  IVec coroot_norm;         // (alphacheck_j, alphacheck_j)/2, min value 1
  IMat positive_roots;      // simple-root coordinates
  IMat positive_coroots;    // simple-coroot coordinates
  IVec two_rho;             // sum of positive roots, simple-root coordinates
  IVec highest_root;        // simple-root coordinates
  IVec highest_short_coroot;  // alphacheck_0: coroot coords of the dominant
                              // short coroot of maximal height
  std::vector<int> minus_w0_perm;  // -w0(omegacheck_i) = omegacheck_perm[i]
};

/// Cached accessor; the datum for each type is built once.
const RootDatum& build_root_system(const LieType& type);

// -- Coordinate conversions --------------------------------------------------

Coweight make_coweight(const LieType& type, Basis basis, IVec coords);

/// Converts between Fundamental/Coroot/Classical coordinates.  Throws
/// std::invalid_argument when the result is not integral (the message embeds
/// the offending rational coordinate) or when Classical is requested for an
/// exceptional type.
Coweight convert_basis(const RootDatum& rd, const Coweight& cw, Basis target);

/// Fundamental coordinates of any coweight (shorthand for convert_basis).
IVec fundamental_coords(const RootDatum& rd, const Coweight& cw);

/// True when the coweight lies in the coroot lattice (= coweight lattice of
/// the simply connected group).
bool in_coroot_lattice(const RootDatum& rd, const IVec& fund);

/// Integer coroot coordinates; throws when not in the coroot lattice.
IVec coroot_coords(const RootDatum& rd, const IVec& fund);

// -- Weyl group / dominance --------------------------------------------------

inline bool is_dominant(const IVec& fund) {
  for (long long f : fund)
    if (f < 0) return false;
  return true;
}

/// Dominance order: a <= b iff b - a is a nonnegative integer combination of
/// simple coroots.  (False when the difference is not in the coroot span.)
bool dominance_leq(const RootDatum& rd, const IVec& fund_a, const IVec& fund_b);

struct DominantRep {
  IVec fund;
  int length = 0;  // number of simple reflections applied
};

/// Applies simple reflections until dominant; the result is the unique
/// dominant element of the W-orbit.
DominantRep dominant_representative(const RootDatum& rd, IVec fund);

/// The involution lambda |-> -w0(lambda) on dominant coweights.
IVec minus_w0(const RootDatum& rd, const IVec& fund);

/// <xi, 2rho> = sum over positive roots beta of <beta, xi>; for dominant xi
/// in the coroot lattice this is dim Gr_xi.
long long pairing_two_rho(const RootDatum& rd, const IVec& fund);

/// (xi, beta) for a coweight xi (fundamental coords) and an element beta of
/// the coroot lattice (coroot coords), under the normalized invariant form.
long long sym_pairing(const RootDatum& rd, const IVec& fund, const IVec& coroot);

/// (xi, xi) as an exact rational (integral on the coroot lattice).
Rat norm2(const RootDatum& rd, const IVec& fund);

// -- Display / parsing -------------------------------------------------------

/// Canonical display: classical tuple "2,1,1,0" for classical types,
/// fundamental combination "w2+w7" / "3w1" / "0" for exceptional ones.
std::string coweight_display(const RootDatum& rd, const IVec& fund);

/// Accepts both syntaxes: "w2+w7", "3w1", "0", or a comma-separated classical
/// tuple (classical types only).  Returns fundamental coordinates.
IVec parse_coweight(const RootDatum& rd, const std::string& text);

}  // namespace reederkit
