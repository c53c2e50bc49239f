// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "reederkit/paperdata.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

using namespace reederkit;

namespace reederkit::detail {
extern const char embedded_tables_text[];
extern const unsigned long embedded_tables_size;
}  // namespace reederkit::detail

namespace {

std::string embedded_text() {
  return std::string(reederkit::detail::embedded_tables_text,
                     reederkit::detail::embedded_tables_size);
}

const CalcRow& row_for(const CalcTable& t, const IVec& lam_fund) {
  for (const CalcRow& row : t.rows)
    if (row.lam_fund == lam_fund) return row;
  throw std::out_of_range("no such row");
}

}  // namespace

TEST_CASE("bundled tables expose the expected sections and subgroups") {
  const DataStore& db = tables();
  CHECK(db.calc.size() == 5);
  CHECK(db.stalk.size() == 3);
  CHECK(db.zw.size() == 5);
  REQUIRE(db.classpo.size() == 4);
  CHECK(db.calc.at({Family::E, 6}).h == LieType{Family::A, 5});
  CHECK(db.calc.at({Family::E, 7}).h == LieType{Family::D, 6});
  CHECK(db.calc.at({Family::E, 8}).h == LieType{Family::D, 8});
  CHECK(db.calc.at({Family::F, 4}).h == LieType{Family::E, 6});
  CHECK(db.calc.at({Family::G, 2}).h == LieType{Family::D, 4});
  // golden classical posets: A3, C4, B4, D4 (in file order)
  CHECK(db.classpo[0].t == LieType{Family::A, 3});
  CHECK(db.classpo[1].t == LieType{Family::C, 4});
  CHECK(db.classpo[2].t == LieType{Family::B, 4});
  CHECK(db.classpo[3].t == LieType{Family::D, 4});
  for (const ClasspoGolden& g : db.classpo) {
    CHECK(!g.nodes.empty());
    CHECK(g.pieces.size() == g.nodes.size());
  }
}

TEST_CASE("restriction rows carry the recorded saturations") {
  const CalcTable& e6 = tables().calc.at({Family::E, 6});
  REQUIRE(e6.rows.size() == 8);
  const CalcRow& top = row_for(e6, {3, 0, 0, 0, 0, 0});
  CHECK(top.dim_gr == 48);
  REQUIRE(top.mus.size() == 1);
  REQUIRE(top.mus[0].records.size() == 1);
  const SaturationRecord& rec = top.mus[0].records[0];
  CHECK(rec.h_orbit.type == LieType{Family::A, 5});
  CHECK(rec.h_orbit.partition == IVec({3, 3}));
  CHECK(rec.g_orbit.bala_carter == "2A2");
  CHECK(rec.g_dim == 48);
  // the F4 row at w2 restricts through two fixed-subgroup orbits
  const CalcTable& f4 = tables().calc.at({Family::F, 4});
  const CalcRow& w2 = row_for(f4, {0, 1, 0, 0});
  REQUIRE(w2.mus.size() == 1);
  REQUIRE(w2.mus[0].records.size() == 2);
  CHECK(w2.mus[0].records[0].h_orbit.bala_carter == "A2");
  CHECK(w2.mus[0].records[0].g_orbit.bala_carter == "A2");
  CHECK(w2.mus[0].records[0].g_dim == 30);
  CHECK(w2.mus[0].records[1].h_orbit.bala_carter == "3A1");
  CHECK(w2.mus[0].records[1].g_orbit.bala_carter == "A1+A1t");
  CHECK(w2.mus[0].records[1].g_dim == 28);
  // every table: dim_gr strictly decreasing down to the zero row
  for (const auto& [g, table] : tables().calc) {
    (void)g;
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i)
      CHECK(table.rows[i].dim_gr >= table.rows[i + 1].dim_gr);
    CHECK(table.rows.back().dim_gr == 0);
  }
}

TEST_CASE("stalk tables: shapes, blanks, and pinned values") {
  const StalkTable& e6 = tables().stalk.at({Family::E, 6});
  CHECK(!e6.has_sigma);
  CHECK(e6.ic.size() == 7);
  CHECK(e6.ic_sigma.empty());
  REQUIRE(e6.columns.size() == 2);
  CHECK(e6.columns[0].top_lam == IVec({3, 0, 0, 0, 0, 0}));
  CHECK(e6.columns[1].top_lam == IVec({0, 0, 0, 0, 0, 3}));
  REQUIRE(e6.columns[0].v_column.size() == 6);
  CHECK(e6.columns[0].v_column.back().second == 24);

  const StalkTable& e7 = tables().stalk.at({Family::E, 7});
  CHECK(e7.has_sigma);
  CHECK(e7.ic.size() == 8);
  CHECK(e7.ic_sigma.size() == 8);
  REQUIRE(e7.columns.size() == 1);
  CHECK(e7.columns[0].v_column.back().second == 225);

  const StalkTable& e8 = tables().stalk.at({Family::E, 8});
  CHECK(e8.has_sigma);
  REQUIRE(e8.columns.size() == 1);
  CHECK(e8.columns[0].v_column.back().second == 370);

  CHECK(stalk_value_at_one({Family::E, 6}, "1", SheafKind::Plain) == 24);
  CHECK(stalk_value_at_one({Family::E, 6}, "2A2", SheafKind::Plain) == 1);
  // a '-' cell parses to the empty polynomial, which evaluates to 0
  CHECK(stalk_value_at_one({Family::E, 7}, "4A1", SheafKind::Sigma) == 0);
  CHECK(stalk_value_at_one({Family::E, 7}, "4A1", SheafKind::Plain) == 1);
  CHECK_THROWS_AS(stalk_value_at_one({Family::E, 6}, "1", SheafKind::Sigma),
                  std::invalid_argument);
  CHECK_THROWS_AS(stalk_value_at_one({Family::E, 6}, "E6", SheafKind::Plain),
                  std::invalid_argument);
  CHECK_THROWS_AS(stalk_value_at_one({Family::B, 4}, "1", SheafKind::Plain),
                  std::invalid_argument);
}

TEST_CASE("zero-weight tables record representation labels with dimensions") {
  const ZwTable& e7 = tables().zw.at({Family::E, 7});
  REQUIRE(!e7.rows.empty());
  const ZwRow& top = e7.rows.front();
  REQUIRE(top.reps.size() == 2);
  CHECK(top.reps[0].second == 120);
  CHECK(top.reps[1].second == 105);
  // the dimension is embedded in the label text
  CHECK(top.reps[0].first.find("120") != std::string::npos);
  const ZwTable& g2 = tables().zw.at({Family::G, 2});
  long long trivial_rows = 0;
  for (const ZwRow& row : g2.rows)
    if (row.lam_fund == IVec({0, 0})) {
      ++trivial_rows;
      REQUIRE(row.reps.size() == 1);
      CHECK(row.reps[0].second == 1);
    }
  CHECK(trivial_rows == 1);
}

TEST_CASE("saturation lookup") {
  const SaturationRecord* rec = find_saturation(
      {Family::E, 8}, make_classical_orbit({Family::D, 8}, IVec(16, 1)));
  REQUIRE(rec != nullptr);
  CHECK(rec->g_orbit.bala_carter == "1");
  CHECK(rec->g_dim == 0);
  // the regular A5 orbit does not meet the small pieces of E6
  CHECK(find_saturation({Family::E, 6},
                        make_classical_orbit({Family::A, 5}, {6})) == nullptr);
  CHECK_THROWS_AS(find_saturation({Family::B, 4},
                                  make_classical_orbit({Family::A, 5}, {6})),
                  std::invalid_argument);
}

TEST_CASE("loading validates structure and rejects corrupted text") {
  const std::string text = embedded_text();
  REQUIRE(text.size() > 1000);
  const DataStore db = load_tables(text);
  CHECK(db.calc.size() == 5);
  CHECK(db.stalk.size() == 3);
  CHECK(db.zw.size() == 5);
  CHECK(db.classpo.size() == 4);
  // a truncated file is missing whole sections
  CHECK_THROWS_AS(load_tables(text.substr(0, text.size() / 2)),
                  std::runtime_error);
  // an inconsistent dimension trips the pairing validation
  std::string bad = text;
  const auto pos = bad.find("dim 48");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 6, "dim 47");
  CHECK_THROWS_AS(load_tables(bad), std::runtime_error);
  // garbage keywords are rejected outright
  CHECK_THROWS_AS(load_tables("nonsense keyword line\n"), std::runtime_error);
}
