// SPDX-License-Identifier: MIT
//
// Bundled reference tables: the exceptional-type restriction data (which
// small coweights of the embedded classical subgroup land in which small
// G-orbit closure, and how their nilpotent pieces saturate into exceptional
// orbits), stalk polynomials of the intersection-cohomology sheaves on the
// small nilpotent orbit closures, zero-weight Weyl-group representation
// decompositions, and golden small-coweight posets for low-rank classical
// types.
//
// The data ships embedded in the library; setting REEDERKIT_DATA to a file
// path loads that file instead.  Loading verifies structural invariants
// (dimension pairings, duality closure of rows, label consistency) and
// throws std::runtime_error citing the offending record on any mismatch.
#pragma once

#include "reederkit/lietype.hpp"
#include "reederkit/numeric.hpp"
#include "reederkit/orbits.hpp"
#include "reederkit/rootsystem.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace reederkit {

/// One "mu cell" entry: an H-orbit together with its G-saturation.
struct SaturationRecord {
  OrbitLabel h_orbit;
  OrbitLabel g_orbit;
  long long g_dim = 0;
};

struct CalcSubRow {
  IVec mu_fund;  // H-coweight, fundamental coordinates of H
  std::vector<SaturationRecord> records;
};

struct CalcRow {
  IVec lam_fund;  // G-coweight, fundamental coordinates
  long long dim_gr = 0;
  std::vector<CalcSubRow> mus;
};

struct CalcTable {
  LieType g{Family::A, 1};
  LieType h{Family::A, 1};
  std::vector<CalcRow> rows;
  // Golden Hasse diagrams: covers written (upper, lower).
  std::vector<std::pair<IVec, IVec>> coweight_covers;
  std::vector<std::pair<std::string, std::string>> orbit_covers;
};

struct StalkPolynomial {
  // (exponent of q^(1/2), coefficient); empty = the table shows a blank cell.
  std::vector<std::pair<long long, long long>> terms;
  Int value_at_one() const {
    Int s = 0;
    for (const auto& t : terms) s += t.second;
    return s;
  }
};

struct StalkColumn {
  IVec top_lam;                            // fundamental coordinates
  std::vector<std::pair<IVec, Int>> v_column;  // (lam, multiplicity of lam in V_top)
};

struct StalkTable {
  LieType g{Family::E, 6};
  std::vector<StalkColumn> columns;  // two for E6 (3w1, 3w6), one for E7/E8
  std::map<std::string, StalkPolynomial> ic;
  std::map<std::string, StalkPolynomial> ic_sigma;  // empty when !has_sigma
  bool has_sigma = false;
};

struct ZwRow {
  IVec lam_fund;
  std::vector<std::pair<std::string, long long>> reps;  // (label, dimension)
};

struct ZwTable {
  LieType g{Family::E, 6};
  std::vector<ZwRow> rows;
};

struct ClasspoGolden {
  LieType t{Family::A, 1};
  std::vector<IVec> nodes;  // fundamental coordinates
  std::vector<std::pair<IVec, IVec>> covers;  // (upper, lower)
  std::vector<std::pair<OrbitLabel, OrbitLabel>> orbit_covers;  // (upper, lower)
  // Piece map: source coweight -> orbits (open first for double pieces).
  std::vector<std::pair<IVec, std::vector<OrbitLabel>>> pieces;
};

struct DataStore {
  std::map<LieType, CalcTable> calc;    // E6, E7, E8, F4, G2
  std::map<LieType, StalkTable> stalk;  // E6, E7, E8
  std::map<LieType, ZwTable> zw;        // E6, E7, E8, F4, G2
  std::vector<ClasspoGolden> classpo;   // A3, C4, B4, D4
};

/// Loads (once) and returns the tables; honours REEDERKIT_DATA.  Throws
/// std::runtime_error on parse or invariant failure.
const DataStore& tables();

/// Parses table text directly (used by tables() and by tests).
DataStore load_tables(const std::string& text);

// -- Lookup helpers ----------------------------------------------------------

/// Orbits appearing in the small pieces of an exceptional type, with
/// dimensions; sorted by dimension descending then label.
std::vector<std::pair<std::string, long long>> exceptional_small_orbits(const LieType& g);

long long exceptional_orbit_dimension(const LieType& g, const std::string& bala_carter);

/// Closure order among the small-piece orbits of an exceptional type
/// (reachability in the bundled Hasse diagram).
bool exceptional_closure_leq(const LieType& g, const std::string& a, const std::string& b);

/// G-saturation of an H-orbit (the classical subgroup for types E, the
/// fixed-subgroup partner E6/D4 for F4/G2).  Null when the orbit does not
/// occur in the tables.
const SaturationRecord* find_saturation(const LieType& g, const OrbitLabel& h_orbit);

enum class SheafKind { Plain, Sigma };

/// Stalk polynomial evaluated at q = 1 for the given small-piece orbit.
/// Blank table cells give 0; querying Sigma for a type whose table has no
/// sigma column throws (missing record), as does an unknown orbit label.
Int stalk_value_at_one(const LieType& g, const std::string& orbit, SheafKind kind);

}  // namespace reederkit
