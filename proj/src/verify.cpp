// SPDX-License-Identifier: MIT
#include "reederkit/verify.hpp"

#include "reederkit/matrixmodel.hpp"
#include "reederkit/multiplicity.hpp"
#include "reederkit/paperdata.hpp"
#include "reederkit/reeder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reederkit {
namespace {

struct Case {
  std::string command;
  std::string inputs;
  std::string origin;
  // Returns the computed-value summary; throws CheckFailure on mismatch.
  std::function<std::string()> run;
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& message) { throw CheckFailure(message); }

void require(bool ok, const std::string& message) {
  if (!ok) fail(message);
}

std::string ivec_str(const IVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string orbits_str(const std::vector<OrbitLabel>& orbits) {
  std::string s;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (i) s += " ";
    s += orbit_display(orbits[i]);
  }
  return s;
}

// The two type-A parameterizations of orbit partitions by small coweights:
// entries parts[i] - 1 padded with -1, resp. 1 - parts[i] padded with 1,
// both sorted decreasingly (ambient = number of entries).
IVec tau1_preimage(const IVec& parts, int ambient) {
  IVec a;
  for (long long p : parts) a.push_back(p - 1);
  while (static_cast<int>(a.size()) < ambient) a.push_back(-1);
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

IVec tau2_preimage(const IVec& parts, int ambient) {
  IVec a;
  for (long long p : parts) a.push_back(1 - p);
  while (static_cast<int>(a.size()) < ambient) a.push_back(1);
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

// ---------------------------------------------------------------------------
// tables suite
// ---------------------------------------------------------------------------

void add_tables_cases(std::vector<Case>& cases) {
  const DataStore& store = tables();

  cases.push_back({"tables/load", "embedded tables", "bundled tables", [&store] {
    require(store.calc.size() == 5 && store.stalk.size() == 3 && store.zw.size() == 5 &&
                store.classpo.size() == 4,
            "section inventory is wrong");
    return std::string("5 calc, 3 stalk, 5 zw, 4 classpo sections");
  }});

  for (const auto& [g, table] : store.calc) {
    const std::string gname = to_string(g);
    cases.push_back({"tables/calc/" + gname + "/dims", "all rows", "bundled calc " + gname,
                     [&table, g] {
                       const RootDatum& rd = build_root_system(g);
                       for (const CalcRow& row : table.rows)
                         require(pairing_two_rho(rd, row.lam_fund) == row.dim_gr,
                                 "recorded dimension differs at " +
                                     coweight_display(rd, row.lam_fund));
                       return std::to_string(table.rows.size()) + " rows";
                     }});

    cases.push_back({"tables/calc/" + gname + "/pieces", "all rows", "bundled calc " + gname,
                     [&table, g] {
                       const RootDatum& rd = build_root_system(g);
                       for (const CalcRow& row : table.rows) {
                         std::set<OrbitLabel> want;
                         for (const CalcSubRow& sub : row.mus)
                           for (const SaturationRecord& rec : sub.records)
                             want.insert(rec.g_orbit);
                         const ReederPiece piece = reeder_piece(g, row.lam_fund);
                         const std::set<OrbitLabel> got(piece.orbits.begin(),
                                                        piece.orbits.end());
                         if (got != want)
                           fail("piece at " + coweight_display(rd, row.lam_fund) +
                                " computed {" + orbits_str(piece.orbits) + "}");
                       }
                       return std::to_string(table.rows.size()) + " pieces";
                     }});

    cases.push_back(
        {"tables/calc/" + gname + "/covers", "small poset", "bundled calc " + gname,
         [&table, g] {
           const SmallPoset poset = small_poset(g);
           std::set<std::pair<IVec, IVec>> got;
           for (const auto& [u, l] : poset.covers) got.insert({poset.nodes[u], poset.nodes[l]});
           const std::set<std::pair<IVec, IVec>> want(table.coweight_covers.begin(),
                                                      table.coweight_covers.end());
           require(got == want, "cover relation differs (" + std::to_string(got.size()) +
                                    " computed, " + std::to_string(want.size()) + " recorded)");
           return std::to_string(got.size()) + " covers";
         }});

    cases.push_back(
        {"tables/calc/" + gname + "/orbitcovers", "closure order", "bundled calc " + gname,
         [&table, g] {
           for (const auto& [up, dn] : table.orbit_covers) {
             require(exceptional_closure_leq(g, dn, up) && !exceptional_closure_leq(g, up, dn),
                     "closure order violated at " + up + " > " + dn);
             require(exceptional_orbit_dimension(g, up) > exceptional_orbit_dimension(g, dn),
                     "dimensions not strictly decreasing at " + up + " > " + dn);
           }
           return std::to_string(table.orbit_covers.size()) + " orbit covers";
         }});

    if (g.family == Family::E) {
      cases.push_back(
          {"tables/calc/" + gname + "/cells", "restriction of partner smalls",
           "bundled calc " + gname, [&table, g] {
             const RootDatum& rd = build_root_system(g);
             const SmallRestriction restriction = restrict_small(g);
             require(restriction.cells.size() == table.rows.size(),
                     "cell count " + std::to_string(restriction.cells.size()));
             std::size_t mus = 0;
             for (const CalcRow& row : table.rows) {
               const auto it = restriction.cells.find(row.lam_fund);
               if (it == restriction.cells.end())
                 fail("no cell at " + coweight_display(rd, row.lam_fund));
               std::set<IVec> want;
               for (const CalcSubRow& sub : row.mus) want.insert(sub.mu_fund);
               const std::set<IVec> got(it->second.begin(), it->second.end());
               if (got != want)
                 fail("cell at " + coweight_display(rd, row.lam_fund) + " has " +
                      std::to_string(got.size()) + " sources, table records " +
                      std::to_string(want.size()));
               mus += want.size();
             }
             return std::to_string(restriction.cells.size()) + " cells, " +
                    std::to_string(mus) + " sources, " +
                    std::to_string(restriction.outside.size()) + " outside";
           }});
    } else {
      cases.push_back(
          {"tables/calc/" + gname + "/fold", "diagram folding", "bundled calc " + gname,
           [&table, g] {
             const RootDatum& rd = build_root_system(g);
             const RootDatum& rdh = build_root_system(restriction_partner(g));
             for (const CalcRow& row : table.rows) {
               require(row.mus.size() == 1, "folded rows carry a single source");
               const IVec mu = unfold_coweight(g, row.lam_fund);
               if (mu != row.mus[0].mu_fund)
                 fail("unfolding of " + coweight_display(rd, row.lam_fund) + " computed " +
                      coweight_display(rdh, mu));
               std::vector<OrbitLabel> want;
               for (const SaturationRecord& rec : row.mus[0].records)
                 want.push_back(rec.g_orbit);
               const ReederPiece piece = reeder_piece(g, row.lam_fund);
               if (piece.orbits != want)
                 fail("piece at " + coweight_display(rd, row.lam_fund) + " computed {" +
                      orbits_str(piece.orbits) + "}");
             }
             return std::to_string(table.rows.size()) + " rows";
           }});
    }
  }

  for (const auto& [g, table] : store.stalk) {
    const std::string gname = to_string(g);
    for (const StalkColumn& column : table.columns) {
      const RootDatum& rd = build_root_system(g);
      const std::string top = coweight_display(rd, column.top_lam);
      cases.push_back(
          {"tables/vcolumn/" + gname + "/" + top, "weight multiplicities",
           "bundled stalk " + gname, [&column, g] {
             const RootDatum& rdg = build_root_system(g);
             for (const auto& [lam, mult] : column.v_column) {
               const Int got = weight_multiplicity(rdg, column.top_lam, lam);
               if (got != mult)
                 fail("multiplicity of " + coweight_display(rdg, lam) + " computed " +
                      got.str() + ", table records " + mult.str());
             }
             return std::to_string(column.v_column.size()) + " entries";
           }});
    }
  }

  for (const auto& [g, table] : store.zw) {
    const std::string gname = to_string(g);
    for (const ZwRow& row : table.rows) {
      const RootDatum& rd = build_root_system(g);
      const std::string lam = coweight_display(rd, row.lam_fund);
      cases.push_back({"tables/zw/" + gname + "/" + lam, "zero weight dimension",
                       "bundled zw " + gname, [&row, g] {
                         const RootDatum& rdg = build_root_system(g);
                         long long want = 0;
                         for (const auto& rep : row.reps) want += rep.second;
                         const ZeroWeightDim zw = zero_weight_dim(rdg, row.lam_fund);
                         require(zw.lattice_ok, "coweight is outside the coroot lattice");
                         if (zw.value != want)
                           fail("computed " + zw.value.str() + ", table records " +
                                std::to_string(want));
                         return zw.value.str() + " = sum of " +
                                std::to_string(row.reps.size()) + " factor dimensions";
                       }});
    }
  }

  for (const ClasspoGolden& gold : store.classpo) {
    const std::string tname = to_string(gold.t);
    cases.push_back({"tables/classpo/" + tname + "/nodes", "small coweights",
                     "bundled classpo " + tname, [&gold] {
                       const std::vector<IVec> nodes = enumerate_small(gold.t);
                       const std::set<IVec> got(nodes.begin(), nodes.end());
                       const std::set<IVec> want(gold.nodes.begin(), gold.nodes.end());
                       require(got == want, "node set differs");
                       return std::to_string(got.size()) + " nodes";
                     }});
    cases.push_back({"tables/classpo/" + tname + "/covers", "dominance covers",
                     "bundled classpo " + tname, [&gold] {
                       const SmallPoset poset = small_poset(gold.t);
                       std::set<std::pair<IVec, IVec>> got;
                       for (const auto& [u, l] : poset.covers)
                         got.insert({poset.nodes[u], poset.nodes[l]});
                       const std::set<std::pair<IVec, IVec>> want(gold.covers.begin(),
                                                                  gold.covers.end());
                       require(got == want, "cover set differs");
                       return std::to_string(got.size()) + " covers";
                     }});
    cases.push_back({"tables/classpo/" + tname + "/pieces", "orbit decompositions",
                     "bundled classpo " + tname, [&gold] {
                       const RootDatum& rd = build_root_system(gold.t);
                       for (const auto& [lam, orbits] : gold.pieces) {
                         const ReederPiece piece = reeder_piece(gold.t, lam);
                         if (piece.orbits != orbits)
                           fail("piece at " + coweight_display(rd, lam) + " computed {" +
                                orbits_str(piece.orbits) + "}");
                       }
                       return std::to_string(gold.pieces.size()) + " pieces";
                     }});
    cases.push_back({"tables/classpo/" + tname + "/orbitcovers", "closure order",
                     "bundled classpo " + tname, [&gold] {
                       for (const auto& [up, dn] : gold.orbit_covers) {
                         require(closure_leq(dn, up) && !closure_leq(up, dn),
                                 "closure order violated at " + orbit_display(up));
                         require(orbit_dimension(up) > orbit_dimension(dn),
                                 "dimensions not strictly decreasing");
                       }
                       return std::to_string(gold.orbit_covers.size()) + " orbit covers";
                     }});
  }
}

// ---------------------------------------------------------------------------
// poset suite: structural properties of the classical piece engine
// ---------------------------------------------------------------------------

/// Valid orbit partitions of the given ambient size with all parts <= 3 and
/// at most two parts equal to 3; these are exactly the orbits met by pieces.
std::vector<OrbitLabel> small_orbit_range(const LieType& t) {
  const long long total = t.family == Family::A   ? t.rank + 1
                          : t.family == Family::B ? 2 * t.rank + 1
                                                  : 2 * t.rank;
  const long long max_part = t.family == Family::C ? 2 : 3;
  std::vector<OrbitLabel> out;
  for (long long threes = 0; threes * 3 <= total && threes <= 2; ++threes) {
    if (max_part < 3 && threes > 0) break;
    for (long long twos = 0; threes * 3 + twos * 2 <= total; ++twos) {
      const long long ones = total - threes * 3 - twos * 2;
      IVec parts;
      parts.insert(parts.end(), threes, 3);
      parts.insert(parts.end(), twos, 2);
      parts.insert(parts.end(), ones, 1);
      // parity validity
      if (t.family == Family::B || t.family == Family::D) {
        if (twos % 2 != 0) continue;
      } else if (t.family == Family::C) {
        if ((threes + ones) % 2 != 0) continue;  // odd parts pair up
        if (threes != 0) continue;
      }
      if (t.family == Family::D && threes == 0 && ones == 0) {
        out.push_back(make_classical_orbit(t, parts, VeryEvenTag::I));
        out.push_back(make_classical_orbit(t, parts, VeryEvenTag::II));
      } else {
        out.push_back(make_classical_orbit(t, parts));
      }
    }
  }
  return out;
}

void add_poset_cases(std::vector<Case>& cases) {
  std::vector<LieType> types;
  for (int n = 1; n <= 8; ++n) types.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) types.push_back({Family::B, n});
  for (int n = 2; n <= 8; ++n) types.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) types.push_back({Family::D, n});

  for (const LieType& t : types) {
    const std::string tname = to_string(t);

    cases.push_back({"poset/" + tname + "/counts", "enumeration", "", [t] {
      const RootDatum& rd = build_root_system(t);
      const std::vector<IVec> nodes = enumerate_small(t);
      require(static_cast<long long>(nodes.size()) == small_count_closed_form(t),
              "count differs from the closed form");
      for (const IVec& node : nodes)
        require(is_small(rd, node), "enumerated coweight fails the smallness test");
      require(std::set<IVec>(nodes.begin(), nodes.end()).size() == nodes.size(),
              "duplicate nodes");
      return std::to_string(nodes.size()) + " small coweights";
    }});

    cases.push_back({"poset/" + tname + "/ideal", "downward closure", "", [t] {
      const RootDatum& rd = build_root_system(t);
      const std::vector<IVec> nodes = enumerate_small(t);
      const std::set<IVec> node_set(nodes.begin(), nodes.end());
      for (const IVec& node : nodes)
        for (const IVec& below : dominant_weights_below(rd, node))
          require(node_set.count(below) == 1,
                  "dominant coweight below " + coweight_display(rd, node) +
                      " is not in the enumeration");
      return "lower order ideal over " + std::to_string(nodes.size()) + " nodes";
    }});

    cases.push_back({"poset/" + tname + "/duality", "minus-w0 involution", "", [t] {
      const SmallPoset poset = small_poset(t);
      const int n = static_cast<int>(poset.nodes.size());
      std::set<std::pair<int, int>> covers(poset.covers.begin(), poset.covers.end());
      for (int i = 0; i < n; ++i) {
        require(poset.dual[poset.dual[i]] == i, "dual is not an involution");
        require(poset.dims[poset.dual[i]] == poset.dims[i], "dual changes the dimension");
      }
      for (const auto& [u, l] : poset.covers)
        require(covers.count({poset.dual[u], poset.dual[l]}) == 1,
                "dual does not preserve covers");
      return "involution on " + std::to_string(n) + " nodes, " +
             std::to_string(poset.covers.size()) + " covers";
    }});

    cases.push_back({"poset/" + tname + "/pieces", "orbit decompositions", "", [t] {
      const RootDatum& rd = build_root_system(t);
      int doubles = 0;
      for (const IVec& node : enumerate_small(t)) {
        const ReederPiece piece = reeder_piece(t, node);
        require(!piece.orbits.empty() && piece.orbits.size() <= 2,
                "piece must meet one or two orbits");
        require(orbit_dimension(piece.orbits.front()) == pairing_two_rho(rd, node),
                "open orbit dimension differs from the cell dimension at " +
                    coweight_display(rd, node));
        if (piece.orbits.size() == 2) {
          ++doubles;
          require(orbit_dimension(piece.orbits[0]) > orbit_dimension(piece.orbits[1]),
                  "double piece is not ordered open first");
          require(piece.self_dual, "double piece at a non-self-dual coweight");
          require(closure_leq(piece.orbits[1], piece.orbits[0]),
                  "closed orbit is not in the closure of the open orbit");
        }
        require(piece.self_dual == (minus_w0(rd, node) == node), "self-dual flag is wrong");
      }
      return std::to_string(doubles) + " double pieces";
    }});

    cases.push_back({"poset/" + tname + "/partition", "orbit list coverage", "", [t] {
      std::map<OrbitLabel, int> seen;
      const std::vector<IVec> nodes = enumerate_small(t);
      for (const IVec& node : nodes)
        for (const OrbitLabel& orbit : reeder_piece(t, node).orbits) ++seen[orbit];
      if (t.family == Family::A) {
        // every piece meets one orbit, and the fibers of node -> orbit are
        // exactly the pairs {tau1-preimage, tau2-preimage} of each partition
        const RootDatum& rd = build_root_system(t);
        std::map<IVec, std::set<IVec>> fibers;
        for (const IVec& node : nodes) {
          const ReederPiece piece = reeder_piece(t, node);
          require(piece.orbits.size() == 1, "type A pieces meet a single orbit");
          fibers[piece.orbits[0].partition].insert(node);
        }
        const std::vector<IVec> all_parts = partitions_of(t.rank + 1);
        require(fibers.size() == all_parts.size(),
                "orbit list differs from the partitions of n");
        for (const IVec& parts : all_parts) {
          std::set<IVec> want;
          for (const IVec& a : {tau1_preimage(parts, t.rank + 1),
                                tau2_preimage(parts, t.rank + 1)})
            want.insert(
                convert_basis(rd, make_coweight(t, Basis::Classical, a), Basis::Fundamental)
                    .coords);
          const auto it = fibers.find(parts);
          require(it != fibers.end() && it->second == want,
                  "fiber over " + ivec_str(parts) + " is not the parameterization pair");
        }
        return std::to_string(fibers.size()) + " orbits from " + std::to_string(nodes.size()) +
               " pieces";
      }
      const std::vector<OrbitLabel> range = small_orbit_range(t);
      {
        const std::vector<OrbitLabel> listed = small_orbit_list(t);
        require(std::set<OrbitLabel>(listed.begin(), listed.end()) ==
                    std::set<OrbitLabel>(range.begin(), range.end()),
                "library orbit list differs from the independent enumeration");
      }
      require(seen.size() == range.size(),
              "orbit list size " + std::to_string(seen.size()) + ", expected " +
                  std::to_string(range.size()));
      for (const OrbitLabel& orbit : range) {
        const auto it = seen.find(orbit);
        require(it != seen.end(), "orbit " + orbit_display(orbit) + " is not met");
        int expected = 1;
        if (t.family == Family::D && t.rank % 2 == 1) {
          // odd rank: the top coweight pair shares one orbit
          const long long threes = std::count(orbit.partition.begin(), orbit.partition.end(), 3);
          const long long ones = std::count(orbit.partition.begin(), orbit.partition.end(), 1);
          if (threes == 2 && ones == 0) expected = 2;
        }
        require(it->second == expected, "orbit " + orbit_display(orbit) + " met " +
                                            std::to_string(it->second) + " times");
      }
      return std::to_string(range.size()) + " orbits from " + std::to_string(nodes.size()) +
             " pieces";
    }});

    cases.push_back({"poset/" + tname + "/attach", "weighted diagrams", "", [t] {
      const RootDatum& rd = build_root_system(t);
      const std::vector<IVec> nodes = enumerate_small(t);
      std::set<IVec> node_set(nodes.begin(), nodes.end());
      int attached = 0, self_dual = 0;
      for (const IVec& node : nodes)
        if (minus_w0(rd, node) == node) ++self_dual;
      std::vector<OrbitLabel> range;
      if (t.family == Family::A) {
        for (const IVec& node : nodes) {
          const OrbitLabel o = reeder_piece(t, node).orbits[0];
          if (std::find(range.begin(), range.end(), o) == range.end()) range.push_back(o);
        }
      } else {
        range = small_orbit_range(t);
      }
      for (const OrbitLabel& orbit : range) {
        const Coweight wdd = weighted_dynkin_classical(orbit);
        const IVec fund =
            convert_basis(rd, wdd, Basis::Fundamental).coords;
        if (!node_set.count(fund)) continue;
        ++attached;
        require(minus_w0(rd, fund) == fund,
                "attached coweight " + coweight_display(rd, fund) + " is not self-dual");
        const ReederPiece piece = reeder_piece(t, fund);
        require(piece.orbits.back() == orbit,
                "orbit " + orbit_display(orbit) + " is not the closed orbit of its piece");
      }
      require(attached == self_dual, "attached " + std::to_string(attached) +
                                         " orbits, self-dual nodes " +
                                         std::to_string(self_dual));
      return std::to_string(attached) + " attached orbits";
    }});
  }

  // Hook-length dimension shadow in type A: the zero weight space of the
  // representation at tau1-preimage of a partition matches the Specht module.
  for (int n = 1; n <= 8; ++n) {
    cases.push_back({"poset/A" + std::to_string(n) + "/hooks", "zero weight spaces", "", [n] {
      const LieType t{Family::A, n};
      const RootDatum& rd = build_root_system(t);
      for (const IVec& parts : partitions_of(n + 1)) {
        IVec a;
        for (long long p : parts) a.push_back(p - 1);
        while (static_cast<int>(a.size()) < n + 1) a.push_back(-1);
        const IVec fund =
            convert_basis(rd, make_coweight(t, Basis::Classical, a), Basis::Fundamental)
                .coords;
        // hook length formula
        Int hooks = 1;
        for (std::size_t r = 0; r < parts.size(); ++r)
          for (long long c = 0; c < parts[r]; ++c) {
            long long below = 0;
            for (std::size_t r2 = r + 1; r2 < parts.size(); ++r2)
              if (parts[r2] > c) ++below;
            hooks *= parts[r] - c + below;
          }
        Int dim = 1;
        for (long long k = 2; k <= n + 1; ++k) dim *= k;
        dim /= hooks;
        const ZeroWeightDim zw = zero_weight_dim(rd, fund);
        require(zw.lattice_ok, "tau1 preimage left the coroot lattice");
        if (zw.value != dim)
          fail("zero weight dimension at " + ivec_str(a) + " computed " + zw.value.str() +
               ", hook formula gives " + dim.str());
      }
      return std::to_string(partitions_of(n + 1).size()) + " partitions";
    }});
  }
}

// ---------------------------------------------------------------------------
// stalk suite
// ---------------------------------------------------------------------------

void add_stalk_cases(std::vector<Case>& cases) {
  for (const auto& [g, table] : tables().stalk) {
    const std::string gname = to_string(g);
    const RootDatum& rd = build_root_system(g);
    for (const StalkColumn& column : table.columns) {
      const std::string top = coweight_display(rd, column.top_lam);
      for (const auto& entry : table.ic) {
        const std::string orbit = entry.first;
        cases.push_back(
            {"stalk/" + gname + "/" + top + "/" + orbit, "fixed points against stalks",
             "bundled stalk " + gname, [g, &column, orbit, &table] {
               Int lhs = stalk_value_at_one(g, orbit, SheafKind::Plain);
               if (table.has_sigma) lhs += stalk_value_at_one(g, orbit, SheafKind::Sigma);
               const std::map<OrbitLabel, Int> rhs =
                   stalk_fixed_point_counts(g, column.top_lam);
               int matched = 0;
               for (const auto& [horbit, count] : rhs) {
                 const SaturationRecord* rec = find_saturation(g, horbit);
                 if (!rec || rec->g_orbit.bala_carter != orbit) continue;
                 ++matched;
                 if (count != lhs)
                   fail("fixed points over " + orbit_display(horbit) + " count " +
                        count.str() + ", stalk value " + lhs.str());
               }
               require(matched > 0, "no source orbit saturates here");
               return lhs.str() + " points over " + std::to_string(matched) +
                      " source orbit(s)";
             }});
      }
      cases.push_back(
          {"stalk/" + gname + "/" + top + "/coverage", "source orbit accounting",
           "bundled stalk " + gname, [g, &column, &table] {
             const std::map<OrbitLabel, Int> rhs = stalk_fixed_point_counts(g, column.top_lam);
             std::set<std::string> seen;
             for (const auto& [horbit, count] : rhs) {
               const SaturationRecord* rec = find_saturation(g, horbit);
               if (!rec) {
                 require(count == 0, "unsaturated orbit " + orbit_display(horbit) +
                                         " counts " + count.str());
                 continue;
               }
               seen.insert(rec->g_orbit.bala_carter);
             }
             std::set<std::string> want;
             for (const auto& entry : table.ic) want.insert(entry.first);
             require(seen == want, "saturated orbit labels differ from the stalk rows");
             return std::to_string(seen.size()) + " orbit rows covered";
           }});
    }
  }
}

// ---------------------------------------------------------------------------
// matrix suite
// ---------------------------------------------------------------------------

void add_matrix_cases(std::vector<Case>& cases) {
  cases.push_back({"matrix/rank2-element", "explicit 2x2 element", "", [] {
    const QMat x1 = qmat_from_int({{1, 0}, {1, -1}});
    const LaurentMatrix g = laurent_from_parts(
        {qmat_identity(2), x1, qmat_from_int({{0, 1}, {0, 1}})});
    require(coweight_of_element(g).coords == IVec({2, -2}),
            "coweight is not (2,-2)");
    const QMat image = pi_dagger(g);
    require(qmat_is_zero(qmat_sub(image, x1)), "projection differs");
    bool nilpotent = true;
    try {
      jordan_type(image);
    } catch (const std::invalid_argument&) {
      nilpotent = false;
    }
    require(!nilpotent, "projection is nilpotent but must not be");
    require(qmat_is_zero(qmat_sub(pi_dagger(iota(g)), image)),
            "projection changes under the involution");
    return std::string("coweight (2,-2), semisimple projection");
  }});

  for (int n = 2; n <= 6; ++n) {
    for (const IVec& parts : partitions_of(n)) {
      const LieType t{Family::A, n - 1};
      cases.push_back(
          {"matrix/orbit-model/A" + std::to_string(n - 1) + "/" + ivec_str(parts),
           "5 seeds", "", [t, parts, n] {
             const OrbitLabel label = make_classical_orbit(t, parts);
             for (unsigned seed = 1; seed <= 5; ++seed) {
               const NilpotentModel model = build_nilpotent(t, label, seed);
               require(jordan_type(model.x) == label.partition, "Jordan type round trip");
               const LaurentMatrix g1 =
                   laurent_from_parts({qmat_identity(n), model.x});
               require(coweight_of_element(g1).coords == tau1_preimage(parts, n),
                       "coweight of 1 + x/t");
               const LaurentMatrix g2 = laurent_inverse(
                   laurent_from_parts({qmat_identity(n), qmat_scale(model.x, Rat(-1))}), n);
               require(coweight_of_element(g2).coords == tau2_preimage(parts, n),
                       "coweight of (1 - x/t)^-1");
             }
             return std::string("both parameterizations recover the coweight");
           }});
    }
  }

  // involution lemmas on seeded products of unipotent factors
  for (int k = 0; k < 100; ++k) {
    cases.push_back({"matrix/involution/" + std::to_string(k), "seeded element", "", [k] {
      SmallIntRng rng(1000 + k);
      const int n = static_cast<int>(rng.pick(2, 5));
      LaurentMatrix g = laurent_identity(n);
      for (int factor = 0; factor < 3; ++factor) {
        QMat x = qmat_zero(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) x[i][j] = rng.pick(-2, 2);
        const int i = static_cast<int>(rng.pick(0, n - 1));
        const int j = static_cast<int>(rng.pick(0, n - 1));
        if (i != j) {
          QMat shear = qmat_identity(n);
          shear[i][j] = rng.pick(-1, 1);
          QMat unshear = qmat_identity(n);
          unshear[i][j] = -shear[i][j];
          x = qmat_mul(shear, qmat_mul(x, unshear));
        }
        g = laurent_mul(g, laurent_from_parts({qmat_identity(n), x}));
      }
      const int bound = 4 * n * static_cast<int>(g.coeffs.size());
      const LaurentMatrix gi = iota(g, bound);
      require(qmat_is_zero(qmat_sub(pi_dagger(gi), pi_dagger(g))),
              "projection changes under the involution");
      require(laurent_equal(iota(gi, bound), g), "involution squared is not the identity");
      const IVec cw = coweight_of_element(g).coords;
      IVec dual;
      for (auto it = cw.rbegin(); it != cw.rend(); ++it) dual.push_back(-*it);
      require(coweight_of_element(gi).coords == dual,
              "involution does not dualize the coweight");
      return "n=" + std::to_string(n) + ", coweight (" + ivec_str(cw) + ")";
    }});
  }

  // square-zero models: the form identity and the fixed-point property
  struct SquareZeroCase {
    LieType t;
    IVec lam;  // classical coordinates
  };
  std::vector<SquareZeroCase> square_zero;
  for (int n : {3, 4}) {
    for (int j = 1; j <= n; ++j) {
      IVec lam(n, 0);
      for (int i = 0; i < j; ++i) lam[i] = 1;
      square_zero.push_back({{Family::C, n}, lam});
    }
    for (int j = 1; 2 * j <= n; ++j) {
      IVec lam(n, 0);
      for (int i = 0; i < 2 * j; ++i) lam[i] = 1;
      square_zero.push_back({{Family::B, n}, lam});
    }
  }
  for (int j = 1; j <= 2; ++j) {
    IVec lam(4, 0);
    for (int i = 0; i < 2 * j; ++i) lam[i] = 1;
    square_zero.push_back({{Family::D, 4}, lam});
  }
  for (const SquareZeroCase& sq : square_zero) {
    cases.push_back(
        {"matrix/square-zero/" + to_string(sq.t) + "/" + ivec_str(sq.lam), "unipotent model",
         "", [sq] {
           const ReederPiece piece = reeder_piece(sq.t, [&] {
             const RootDatum& rd = build_root_system(sq.t);
             return convert_basis(rd, make_coweight(sq.t, Basis::Classical, sq.lam),
                                  Basis::Fundamental)
                 .coords;
           }());
           const OrbitLabel label = piece.orbits.back();
           const NilpotentModel model = build_nilpotent(sq.t, label, 23);
           require(qmat_is_zero(qmat_mul(model.x, model.x)), "x^2 != 0");
           const int N = static_cast<int>(model.x.size());
           const LaurentMatrix g = laurent_from_parts({qmat_identity(N), model.x});
           require(preserves_form(g, *model.form), "form identity fails");
           require(laurent_equal(iota(g), g), "element is not fixed by the involution");
           require(coweight_of_element(g).coords == ambient_coweight(sq.t, sq.lam),
                   "ambient coweight differs");
           return "orbit " + orbit_display(label);
         }});
  }

  // rank-one x^2: exponentials
  struct ExpCase {
    LieType t;
    IVec lam;
  };
  std::vector<ExpCase> exp_cases;
  for (int n : {3, 4}) {
    for (int j = 0; 2 * n - 4 * j - 2 >= 0; ++j) {
      IVec lam(n, 0);
      lam[0] = 2;
      for (int i = 0; i < 2 * j; ++i) lam[1 + i] = 1;
      exp_cases.push_back({{Family::B, n}, lam});
    }
  }
  exp_cases.push_back({{Family::D, 4}, {2, 0, 0, 0}});
  exp_cases.push_back({{Family::D, 4}, {2, 1, 1, 0}});
  for (const ExpCase& ec : exp_cases) {
    cases.push_back(
        {"matrix/exponential/" + to_string(ec.t) + "/" + ivec_str(ec.lam),
         "rank-one x^2 model", "", [ec] {
           const RootDatum& rd = build_root_system(ec.t);
           const ReederPiece piece = reeder_piece(
               ec.t, convert_basis(rd, make_coweight(ec.t, Basis::Classical, ec.lam),
                                   Basis::Fundamental)
                         .coords);
           const OrbitLabel label = piece.orbits.back();  // the rank-one x^2 orbit
           const NilpotentModel model = build_nilpotent(ec.t, label, 29);
           const QMat x2 = qmat_mul(model.x, model.x);
           require(qmat_rank(x2) == 1 && qmat_is_zero(qmat_mul(x2, model.x)),
                   "representative shape is wrong");
           const LaurentMatrix g = exp_tinv(model.x);
           require(preserves_form(g, *model.form), "form identity fails");
           require(laurent_equal(iota(g), g), "exponential is not fixed by the involution");
           require(coweight_of_element(g).coords == ambient_coweight(ec.t, ec.lam),
                   "ambient coweight differs");
           return "orbit " + orbit_display(label);
         }});
  }

  // rank-two x^2: the split of x^2 and the involution swap
  struct SplitCase {
    LieType t;
    IVec lam;
    unsigned seed;
  };
  const std::vector<SplitCase> split_cases = {
      {{Family::B, 3}, {2, 1, 1}, 31},
      {{Family::B, 4}, {2, 1, 1, 0}, 37},
      {{Family::D, 4}, {2, 1, 1, 0}, 41},
  };
  for (const SplitCase& sc : split_cases) {
    cases.push_back(
        {"matrix/x2-split/" + to_string(sc.t) + "/" + ivec_str(sc.lam),
         "rank-two x^2 model", "", [sc] {
           const RootDatum& rd = build_root_system(sc.t);
           const ReederPiece piece = reeder_piece(
               sc.t, convert_basis(rd, make_coweight(sc.t, Basis::Classical, sc.lam),
                                   Basis::Fundamental)
                         .coords);
           const OrbitLabel open = piece.orbits.front();
           const NilpotentModel model = build_nilpotent(sc.t, open, sc.seed);
           const auto [y1, y2] = x2_decomposition(model.x, *model.form);
           const QMat x2 = qmat_mul(model.x, model.x);
           require(qmat_is_zero(qmat_sub(qmat_add(y1, y2), x2)), "pieces do not sum to x^2");
           require(qmat_rank(y1) == 1 && qmat_rank(y2) == 1, "pieces are not rank one");
           require(qmat_is_zero(qmat_mul(y1, y2)) && qmat_is_zero(qmat_mul(y2, y1)),
                   "pieces do not annihilate each other");
           require(qmat_is_zero(qmat_mul(model.x, y1)) &&
                       qmat_is_zero(qmat_mul(y1, model.x)),
                   "pieces do not annihilate x");
           const int N = static_cast<int>(model.x.size());
           const LaurentMatrix g1 = laurent_from_parts({qmat_identity(N), model.x, y1});
           const LaurentMatrix g2 = laurent_from_parts({qmat_identity(N), model.x, y2});
           require(preserves_form(g1, *model.form) && preserves_form(g2, *model.form),
                   "form identity fails");
           require(laurent_equal(iota(g1), g2) && laurent_equal(iota(g2), g1),
                   "involution does not swap the two elements");
           const IVec want = ambient_coweight(sc.t, sc.lam);
           require(coweight_of_element(g1).coords == want &&
                       coweight_of_element(g2).coords == want,
                   "ambient coweight differs");
           // determinism: the split does not depend on how we found x
           const auto again = x2_decomposition(model.x, *model.form);
           require(qmat_is_zero(qmat_sub(again.first, y1)) &&
                       qmat_is_zero(qmat_sub(again.second, y2)),
                   "split is not deterministic");
           return "open orbit " + orbit_display(open) + ", involution swaps the split";
         }});
  }
}

// ---------------------------------------------------------------------------

std::vector<Case> collect_cases(const std::string& suite) {
  std::vector<Case> cases;
  if (suite == "tables" || suite == "all") add_tables_cases(cases);
  if (suite == "poset" || suite == "all") add_poset_cases(cases);
  if (suite == "stalk" || suite == "all") add_stalk_cases(cases);
  if (suite == "matrix" || suite == "all") add_matrix_cases(cases);
  if (cases.empty() && suite != "all")
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (expected all, tables, poset, stalk, or matrix)");
  return cases;
}

ReportRecord run_case(const Case& c) {
  ReportRecord record{c.command, c.inputs, "", "ok", c.origin};
  try {
    record.outputs = c.run();
  } catch (const CheckFailure& e) {
    record.status = "mismatch";
    record.outputs = e.what();
  } catch (const std::exception& e) {
    record.status = "error";
    record.outputs = e.what();
  }
  return record;
}

}  // namespace

bool all_ok(const std::vector<ReportRecord>& report) {
  return std::all_of(report.begin(), report.end(),
                     [](const ReportRecord& r) { return r.status == "ok"; });
}

std::vector<ReportRecord> verify_suite(const std::string& suite, int jobs) {
  const std::vector<Case> cases = collect_cases(suite);
  std::vector<ReportRecord> report(cases.size());
#ifdef _OPENMP
  if (jobs > 1) {
    omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < cases.size(); ++i) report[i] = run_case(cases[i]);
  } else {
    for (std::size_t i = 0; i < cases.size(); ++i) report[i] = run_case(cases[i]);
  }
#else
  (void)jobs;
  for (std::size_t i = 0; i < cases.size(); ++i) report[i] = run_case(cases[i]);
#endif
  std::sort(report.begin(), report.end(), [](const ReportRecord& a, const ReportRecord& b) {
    if (a.command != b.command) return a.command < b.command;
    return a.inputs < b.inputs;
  });
  return report;
}

std::vector<ReportRecord> verify_cases_serial(const std::string& suite) {
  return verify_suite(suite, 1);
}

}  // namespace reederkit
