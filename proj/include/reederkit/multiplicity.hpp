// SPDX-License-Identifier: MIT
//
// Weight multiplicities of irreducible representations of the dual group:
// for a dominant coweight lambda of G, V_lambda is the irreducible
// representation of the Langlands dual whose weights are coweights of G.
// The relevant "roots" are therefore the coroots of G, and everything is
// computed with the normalized invariant form from rootsystem.hpp.  All
// results are exact integers (Freudenthal's recursion divides exactly).
#pragma once

#include "reederkit/rootsystem.hpp"

#include <map>
#include <vector>

namespace reederkit {

/// Dominant coweights mu <= lambda (dominance order), ordered by
/// <lambda - mu, 2rho> ascending, ties broken lexicographically on
/// fundamental coordinates.  lambda must be dominant and in the coroot
/// lattice.
std::vector<IVec> dominant_weights_below(const RootDatum& rd, const IVec& lam_fund);

struct WeightTable {
  IVec lam;                    // fundamental coords
  std::vector<IVec> dominants; // as dominant_weights_below
  std::map<IVec, Int> mult;    // dominant fundamental coords -> multiplicity
};

/// Cached Freudenthal table for (type, lambda); thread-safe.
const WeightTable& weight_table(const RootDatum& rd, const IVec& lam_fund);

/// Multiplicity of the weight mu in V_lambda (mu arbitrary; it is replaced by
/// its dominant representative).  Zero when mu is not a weight.
Int weight_multiplicity(const RootDatum& rd, const IVec& lam_fund, const IVec& mu_fund);

/// dim V_lambda by the Weyl dimension formula (exact).
Int weyl_dimension(const RootDatum& rd, const IVec& lam_fund);

struct ZeroWeightDim {
  Int value;        // dim V_lambda(0); zero when lattice_ok is false
  bool lattice_ok;  // false iff lambda is outside the coroot lattice
};

/// Dimension of the zero weight space of V_lambda.  For lambda outside the
/// coroot lattice the zero weight does not occur; the flag records that case
/// instead of raising.
ZeroWeightDim zero_weight_dim(const RootDatum& rd, const IVec& lam_fund);

/// |W . mu| for arbitrary mu (orbit enumerated exactly).
Int weyl_orbit_size(const RootDatum& rd, const IVec& mu_fund);

}  // namespace reederkit
