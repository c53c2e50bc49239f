// SPDX-License-Identifier: MIT
//
// Acceptance suite: nine end-to-end criteria, each with a wall-clock budget,
// printing exactly one PASS/FAIL line per criterion.  All comparisons are
// exact; the only tolerances are the time budgets pinned below.  Exits
// nonzero when any criterion fails.
#include "reederkit/multiplicity.hpp"
#include "reederkit/paperdata.hpp"
#include "reederkit/reeder.hpp"
#include "reederkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <tuple>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace reederkit;

namespace {

int failures = 0;

void criterion(int number, const char* name, double budget_seconds,
               const std::function<void(std::vector<std::string>&)>& body) {
  std::vector<std::string> problems;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(problems);
  } catch (const std::exception& e) {
    problems.push_back(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (secs > budget_seconds) {
    std::ostringstream msg;
    msg << "time budget exceeded: " << secs << "s > " << budget_seconds << "s";
    problems.push_back(msg.str());
  }
  if (problems.empty()) {
    std::printf("PASS criterion %d: %s (%.2fs)\n", number, name, secs);
  } else {
    ++failures;
    std::printf("FAIL criterion %d: %s (%.2fs)\n", number, name, secs);
    for (const std::string& p : problems)
      std::printf("       - %s\n", p.c_str());
  }
  std::fflush(stdout);
}

std::string show_longs(const std::vector<long long>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

void expect_counts(std::vector<std::string>& problems) {
  const std::map<std::string, std::size_t> want = {
      {"E6", 8}, {"E7", 6}, {"E8", 5}, {"F4", 4}, {"G2", 3},
      {"A3", 7}, {"C4", 5}, {"B4", 5}, {"D4", 6}};
  for (const auto& [name, count] : want) {
    const LieType t = parse_lie_type(name.substr(0, 1), name[1] - '0');
    const std::size_t got = enumerate_small(t).size();
    if (got != count)
      problems.push_back(name + ": " + std::to_string(got) +
                         " small coweights, expected " + std::to_string(count));
  }
  // golden node sets for the low classical ranks
  for (const ClasspoGolden& gold : tables().classpo) {
    const SmallPoset P = small_poset(gold.t);
    const std::set<IVec> got(P.nodes.begin(), P.nodes.end());
    const std::set<IVec> want_nodes(gold.nodes.begin(), gold.nodes.end());
    if (got != want_nodes)
      problems.push_back(to_string(gold.t) + ": node set mismatch");
  }
  // E6 alone has two maximal small coweights
  const SmallPoset e6 = small_poset({Family::E, 6});
  std::set<int> lowers;
  for (const auto& [u, l] : e6.covers) lowers.insert(l);
  int maximal = 0;
  for (int i = 0; i < static_cast<int>(e6.nodes.size()); ++i)
    if (!lowers.count(i)) ++maximal;
  if (maximal != 2)
    problems.push_back("E6: " + std::to_string(maximal) +
                       " maximal nodes, expected 2");
}

void expect_dim_columns(std::vector<std::string>& problems) {
  const std::vector<std::pair<LieType, std::vector<long long>>> want = {
      {{Family::E, 6}, {48, 48, 46, 46, 42, 32, 22, 0}},
      {{Family::E, 7}, {76, 66, 54, 52, 34, 0}},
      {{Family::E, 8}, {136, 114, 92, 58, 0}},
      {{Family::F, 4}, {30, 22, 16, 0}},
      {{Family::G, 2}, {10, 6, 0}}};
  for (const auto& [t, dims] : want) {
    const SmallPoset P = small_poset(t);
    if (P.dims != dims)
      problems.push_back(to_string(t) + ": dimension column " +
                         show_longs(P.dims) + ", expected " + show_longs(dims));
  }
}

void expect_restriction_cells(std::vector<std::string>& problems) {
  for (int r : {6, 7, 8}) {
    const LieType g{Family::E, r};
    const CalcTable& ct = tables().calc.at(g);
    const SmallRestriction R = restrict_small(g);
    if (R.cells.size() != ct.rows.size())
      problems.push_back(to_string(g) + ": cell count " +
                         std::to_string(R.cells.size()) + " vs " +
                         std::to_string(ct.rows.size()));
    for (const CalcRow& row : ct.rows) {
      const auto it = R.cells.find(row.lam_fund);
      if (it == R.cells.end()) {
        problems.push_back(to_string(g) + ": missing cell");
        continue;
      }
      const std::set<IVec> got(it->second.begin(), it->second.end());
      std::set<IVec> want;
      for (const CalcSubRow& sub : row.mus) want.insert(sub.mu_fund);
      if (got != want)
        problems.push_back(to_string(g) + ": source set mismatch at the row of dimension " +
                           std::to_string(row.dim_gr));
    }
    const std::size_t want_outside = r == 6 ? 8 : (r == 7 ? 0 : 2);
    if (R.outside.size() != want_outside)
      problems.push_back(to_string(g) + ": " + std::to_string(R.outside.size()) +
                         " sources land outside, expected " +
                         std::to_string(want_outside));
  }
  for (const LieType g : {LieType{Family::F, 4}, LieType{Family::G, 2}}) {
    for (const CalcRow& row : tables().calc.at(g).rows) {
      if (row.mus.size() != 1) {
        problems.push_back(to_string(g) + ": expected a single source per row");
        continue;
      }
      if (unfold_coweight(g, row.lam_fund) != row.mus[0].mu_fund)
        problems.push_back(to_string(g) + ": unfolded coweight mismatch at the row of dimension " +
                           std::to_string(row.dim_gr));
    }
  }
}

void expect_v_columns(std::vector<std::string>& problems) {
  const std::map<int, std::vector<long long>> pins = {
      {6, {1, 1, 1, 4, 10, 24}},
      {7, {1, 5, 6, 22, 75, 225}},
      {8, {1, 6, 29, 111, 370}}};
  for (int r : {6, 7, 8}) {
    const LieType g{Family::E, r};
    const RootDatum& rd = build_root_system(g);
    const StalkTable& st = tables().stalk.at(g);
    for (const StalkColumn& col : st.columns) {
      std::vector<long long> got_table, got_computed;
      for (const auto& [lam, mult] : col.v_column) {
        got_table.push_back(static_cast<long long>(mult));
        got_computed.push_back(
            static_cast<long long>(weight_multiplicity(rd, col.top_lam, lam)));
      }
      if (got_table != pins.at(r))
        problems.push_back(to_string(g) + ": recorded multiplicity column " +
                           show_longs(got_table) + ", expected " +
                           show_longs(pins.at(r)));
      if (got_computed != got_table)
        problems.push_back(to_string(g) + ": computed multiplicity column " +
                           show_longs(got_computed) + " differs from the table");
    }
  }
}

void expect_stalk_identity(std::vector<std::string>& problems) {
  for (int r : {6, 7, 8}) {
    const LieType g{Family::E, r};
    const StalkTable& st = tables().stalk.at(g);
    for (const StalkColumn& col : st.columns) {
      std::set<std::string> seen;
      for (const auto& [horbit, count] : stalk_fixed_point_counts(g, col.top_lam)) {
        const SaturationRecord* rec = find_saturation(g, horbit);
        if (!rec) {
          if (count != 0)
            problems.push_back(to_string(g) + ": orbit " + orbit_display(horbit) +
                               " lands outside the small range but counts " +
                               count.str());
          continue;
        }
        const std::string& label = rec->g_orbit.bala_carter;
        seen.insert(label);
        Int lhs = stalk_value_at_one(g, label, SheafKind::Plain);
        if (st.has_sigma) lhs += stalk_value_at_one(g, label, SheafKind::Sigma);
        if (count != lhs)
          problems.push_back(to_string(g) + " orbit " + label +
                             ": fixed points " + count.str() +
                             " != stalk value " + lhs.str());
      }
      std::set<std::string> want;
      for (const auto& entry : st.ic) want.insert(entry.first);
      if (seen != want)
        problems.push_back(to_string(g) + ": saturations cover " +
                           std::to_string(seen.size()) + " of " +
                           std::to_string(want.size()) + " stalk rows");
    }
  }
}

void expect_zero_weight_rows(std::vector<std::string>& problems) {
  for (const auto& [g, table] : tables().zw) {
    const RootDatum& rd = build_root_system(g);
    for (const ZwRow& row : table.rows) {
      long long total = 0;
      for (const auto& [label, dim] : row.reps) total += dim;
      const ZeroWeightDim z = zero_weight_dim(rd, row.lam_fund);
      if (!z.lattice_ok) {
        problems.push_back(to_string(g) + ": " + coweight_display(rd, row.lam_fund) +
                           " unexpectedly outside the coroot lattice");
        continue;
      }
      if (z.value != total)
        problems.push_back(to_string(g) + " at " + coweight_display(rd, row.lam_fund) +
                           ": zero weight dim " + z.value.str() + " != " +
                           std::to_string(total));
    }
  }
  // pinned headline sums
  const std::vector<std::tuple<LieType, IVec, long long>> pins = {
      {{Family::E, 7}, {0, 1, 0, 0, 0, 0, 1}, 225},  // 120 + 105
      {{Family::E, 8}, {0, 1, 0, 0, 0, 0, 0, 0}, 370},  // 210 + 160
      {{Family::E, 6}, {0, 0, 0, 1, 0, 0}, 45},  // 30 + 15
      {{Family::F, 4}, {0, 1, 0, 0}, 9},  // 8 + 1
      {{Family::G, 2}, {1, 0}, 2}};
  for (const auto& [g, lam, want] : pins) {
    const RootDatum& rd = build_root_system(g);
    const ZeroWeightDim z = zero_weight_dim(rd, lam);
    if (!z.lattice_ok || z.value != want)
      problems.push_back(to_string(g) + " at " + coweight_display(rd, lam) +
                         ": zero weight dim != " + std::to_string(want));
  }
}

void expect_suite_ok(const std::string& suite, std::vector<std::string>& problems) {
  const std::vector<ReportRecord> report = verify_cases_serial(suite);
  if (report.empty()) problems.push_back("suite '" + suite + "' ran no checks");
  for (const ReportRecord& rec : report)
    if (rec.status != "ok")
      problems.push_back(rec.command + " [" + rec.inputs + "]: " + rec.status +
                         " (" + rec.outputs + ")");
}

Int hook_length_dim(const IVec& p) {
  const IVec d = dual_partition(p);
  Int n_fact = 1;
  long long total = 0;
  for (long long part : p) total += part;
  for (long long k = 2; k <= total; ++k) n_fact *= k;
  Int hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (long long j = 0; j < p[i]; ++j)
      hooks *= (p[i] - j) + (d[static_cast<std::size_t>(j)] - static_cast<long long>(i)) - 1;
  return n_fact / hooks;
}

void expect_hook_dimensions(std::vector<std::string>& problems) {
  for (int n = 1; n <= 8; ++n) {
    const LieType t{Family::A, n};
    const RootDatum& rd = build_root_system(t);
    for (const IVec& p : partitions_of(n + 1)) {
      IVec classical;
      for (long long part : p) classical.push_back(part - 1);
      while (static_cast<int>(classical.size()) < n + 1) classical.push_back(-1);
      std::sort(classical.begin(), classical.end(), std::greater<>());
      const IVec lam =
          convert_basis(rd, make_coweight(t, Basis::Classical, classical),
                        Basis::Fundamental)
              .coords;
      const ZeroWeightDim z = zero_weight_dim(rd, lam);
      const Int want = hook_length_dim(p);
      if (!z.lattice_ok || z.value != want)
        problems.push_back("A" + std::to_string(n) + " partition " +
                           orbit_display(make_classical_orbit(t, p)) +
                           ": zero weight dim != hook-length dimension " +
                           want.str());
    }
  }
}

}  // namespace

int main() {
  criterion(1, "small coweight counts and golden low-rank posets", 1.0,
            expect_counts);
  criterion(2, "piece dimension columns of the exceptional types", 1.0,
            expect_dim_columns);
  criterion(3, "restriction correspondence of small coweights", 10.0,
            expect_restriction_cells);
  criterion(4, "weight multiplicity columns of the top representations", 60.0,
            expect_v_columns);
  criterion(5, "fixed-point counts equal stalk values at q = 1", 60.0,
            expect_stalk_identity);
  criterion(6, "zero-weight space decompositions", 60.0,
            expect_zero_weight_rows);
  criterion(7, "classical piece engine property suite", 30.0,
            [](std::vector<std::string>& problems) {
              expect_suite_ok("poset", problems);
            });
  criterion(8, "matrix model property suite", 120.0,
            [](std::vector<std::string>& problems) {
              expect_suite_ok("matrix", problems);
            });
  criterion(9, "type A zero-weight spaces match hook-length dimensions", 10.0,
            expect_hook_dimensions);
  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
