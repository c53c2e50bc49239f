// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "reederkit/matrixmodel.hpp"
#include "reederkit/orbits.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

using namespace reederkit;

namespace {

// Matrix of ad_x : y -> x y - y x on n x n matrices, rows/columns indexed by
// the row-major flattening (i, j) -> i * n + j.
QMat ad_matrix(const QMat& x) {
  const std::size_t n = x.size();
  QMat m = qmat_zero(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Rat c = 0;
          if (b == j) c += x[i][a];
          if (a == i) c -= x[b][j];
          if (c != 0) m[i * n + j][a * n + b] = c;
        }
  return m;
}

// Dimension of the conjugation orbit of nilpotent x in sl_n, computed from
// scratch: the tangent space at x is the image of ad_x, so the dimension is
// rank(ad_x).  (The GL_n and SL_n orbits of a nilpotent coincide.)
long long gl_orbit_dim(const QMat& x) {
  return static_cast<long long>(qmat_rank(ad_matrix(x)));
}

// Dimension of the orbit of anti-self-adjoint x under the isometry group of
// the form, again from scratch: dim g minus the dimension of the centralizer
// z_g(x) = { y : [x, y] = 0 and y^T gram + gram y = 0 }, read off as the
// nullity of the stacked linear system.
long long isometry_orbit_dim(const QMat& x, const BilinearForm& form, long long dim_g) {
  const std::size_t n = x.size();
  QMat rows = ad_matrix(x);
  rows.reserve(2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QVec row(n * n, Rat(0));
      for (std::size_t a = 0; a < n; ++a) {
        // coefficient of y_{a b} in (y^T gram + gram y)_{i j}
        row[a * n + i] += form.gram[a][j];
        row[a * n + j] += form.gram[i][a];
      }
      rows.push_back(std::move(row));
    }
  const long long nullity =
      static_cast<long long>(n * n - qmat_rank(std::move(rows)));
  return dim_g - nullity;
}

long long ambient_algebra_dim(const LieType& t) {
  const long long n = t.rank;
  switch (t.family) {
    case Family::B: return (2 * n + 1) * n;      // so_{2n+1}
    case Family::C: return n * (2 * n + 1);      // sp_{2n}
    case Family::D: return n * (2 * n - 1);      // so_{2n}
    default: throw std::logic_error("ambient_algebra_dim: bad family");
  }
}

}  // namespace

TEST_CASE("partition enumeration") {
  const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == expected[n]);
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == IVec({4}));
  CHECK(p4.back() == IVec({1, 1, 1, 1}));
  for (std::size_t i = 0; i + 1 < p4.size(); ++i) CHECK(p4[i] > p4[i + 1]);
  for (const IVec& p : partitions_of(9)) {
    long long total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i] >= 1);
      if (i + 1 < p.size()) CHECK(p[i] >= p[i + 1]);
      total += p[i];
    }
    CHECK(total == 9);
  }
}

TEST_CASE("dual partition") {
  CHECK(dual_partition({3, 1}) == IVec({2, 1, 1}));
  CHECK(dual_partition({4, 2, 1}) == IVec({3, 2, 1, 1}));
  CHECK(dual_partition({5}) == IVec({1, 1, 1, 1, 1}));
  CHECK(dual_partition({}) == IVec({}));
  for (const IVec& p : partitions_of(8))
    CHECK(dual_partition(dual_partition(p)) == p);
}

TEST_CASE("partition validity per family") {
  const LieType a3{Family::A, 3}, b4{Family::B, 4}, c4{Family::C, 4},
      d4{Family::D, 4};
  CHECK(is_valid_orbit_partition(a3, {2, 1, 1}));
  CHECK(!is_valid_orbit_partition(a3, {3, 2}));        // wrong total
  CHECK(!is_valid_orbit_partition(a3, {1, 2, 1}));     // not weakly decreasing
  CHECK(!is_valid_orbit_partition(a3, {4, 0}));        // zero part
  CHECK(is_valid_orbit_partition(b4, {3, 2, 2, 1, 1}));
  CHECK(!is_valid_orbit_partition(b4, {4, 3, 2}));     // even part, odd multiplicity
  CHECK(!is_valid_orbit_partition(b4, {3, 3, 2}));     // wrong total
  CHECK(is_valid_orbit_partition(c4, {2, 2, 2, 2}));
  CHECK(is_valid_orbit_partition(c4, {3, 3, 1, 1}));
  CHECK(!is_valid_orbit_partition(c4, {3, 2, 2, 1}));  // odd part, odd multiplicity
  CHECK(is_valid_orbit_partition(d4, {3, 3, 1, 1}));
  CHECK(is_valid_orbit_partition(d4, {2, 2, 2, 2}));
  CHECK(!is_valid_orbit_partition(d4, {4, 3, 1}));     // even part, odd multiplicity
}

TEST_CASE("very even partitions and the I/II tags") {
  const LieType d4{Family::D, 4}, b4{Family::B, 4};
  CHECK(is_very_even(d4, {2, 2, 2, 2}));
  CHECK(is_very_even(d4, {4, 4}));
  CHECK(!is_very_even(d4, {3, 3, 1, 1}));
  CHECK(!is_very_even(b4, {2, 2, 2, 2, 1}));
  // a very even type D partition labels two orbits; the tag is mandatory
  CHECK_THROWS_AS(make_classical_orbit(d4, {2, 2, 2, 2}), std::invalid_argument);
  const OrbitLabel one = make_classical_orbit(d4, {2, 2, 2, 2}, VeryEvenTag::I);
  const OrbitLabel two = make_classical_orbit(d4, {2, 2, 2, 2}, VeryEvenTag::II);
  CHECK(one != two);
  CHECK(orbit_dimension(one) == orbit_dimension(two));
  // ... and is forbidden everywhere else
  CHECK_THROWS_AS(make_classical_orbit(d4, {3, 3, 1, 1}, VeryEvenTag::I),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_classical_orbit(b4, {3, 3, 1, 1, 1}, VeryEvenTag::II),
                  std::invalid_argument);
  // invalid partitions are rejected
  CHECK_THROWS_AS(make_classical_orbit(b4, {4, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_classical_orbit({Family::G, 2}, {2, 2, 2}),
                  std::invalid_argument);
}

TEST_CASE("orbit dimensions in type A match an exact centralizer computation") {
  for (int n = 2; n <= 6; ++n) {
    const LieType t{Family::A, n - 1};
    for (const IVec& p : partitions_of(n)) {
      const OrbitLabel o = make_classical_orbit(t, p);
      const NilpotentModel model = build_nilpotent(t, o, 7);
      CHECK(!model.form.has_value());
      CHECK(jordan_type(model.x) == p);
      CHECK(orbit_dimension(o) == gl_orbit_dim(model.x));
    }
  }
}

TEST_CASE("orbit dimensions in types B/C/D match an exact centralizer computation") {
  const std::vector<LieType> types = {{Family::B, 2}, {Family::B, 3},
                                      {Family::B, 4}, {Family::C, 2},
                                      {Family::C, 3}, {Family::C, 4},
                                      {Family::D, 4}};
  for (const LieType& t : types) {
    const long long dim_g = ambient_algebra_dim(t);
    for (const OrbitLabel& o : small_orbit_list(t)) {
      CAPTURE(to_string(t));
      CAPTURE(orbit_display(o));
      const NilpotentModel model = build_nilpotent(t, o, 11);
      REQUIRE(model.form.has_value());
      CHECK(is_anti_self_adjoint(model.x, *model.form));
      CHECK(jordan_type(model.x) == o.partition);
      CHECK(orbit_dimension(o) == isometry_orbit_dim(model.x, *model.form, dim_g));
    }
  }
}

TEST_CASE("closure order is dominance of partitions") {
  const LieType a3{Family::A, 3};
  auto orb = [&](const IVec& p) { return make_classical_orbit(a3, p); };
  CHECK(closure_leq(orb({2, 1, 1}), orb({4})));
  CHECK(closure_leq(orb({2, 2}), orb({3, 1})));
  CHECK(!closure_leq(orb({3, 1}), orb({2, 2})));
  CHECK(closure_leq(orb({2, 2}), orb({2, 2})));
  // incomparable pair: the cumulative sums cross
  const LieType a5{Family::A, 5};
  const OrbitLabel p = make_classical_orbit(a5, {3, 1, 1, 1});
  const OrbitLabel q = make_classical_orbit(a5, {2, 2, 2});
  CHECK(!closure_leq(p, q));
  CHECK(!closure_leq(q, p));
  CHECK_THROWS_AS(closure_leq(orb({4}), p), std::invalid_argument);
}

TEST_CASE("the two very even orbits are incomparable but share bounds") {
  const LieType d4{Family::D, 4};
  const OrbitLabel one = make_classical_orbit(d4, {2, 2, 2, 2}, VeryEvenTag::I);
  const OrbitLabel two = make_classical_orbit(d4, {2, 2, 2, 2}, VeryEvenTag::II);
  const OrbitLabel above = make_classical_orbit(d4, {3, 3, 1, 1});
  const OrbitLabel below = make_classical_orbit(d4, {2, 2, 1, 1, 1, 1});
  CHECK(!closure_leq(one, two));
  CHECK(!closure_leq(two, one));
  for (const OrbitLabel& ve : {one, two}) {
    CHECK(closure_leq(ve, above));
    CHECK(closure_leq(below, ve));
    CHECK(closure_leq(ve, ve));
  }
}

TEST_CASE("closure order is a partial order compatible with dimension") {
  std::vector<std::pair<LieType, std::vector<OrbitLabel>>> families;
  {
    const LieType a7{Family::A, 7};
    std::vector<OrbitLabel> all;
    for (const IVec& p : partitions_of(8))
      all.push_back(make_classical_orbit(a7, p));
    families.emplace_back(a7, std::move(all));
  }
  for (const LieType t : {LieType{Family::B, 8}, LieType{Family::C, 8},
                          LieType{Family::D, 8}, LieType{Family::D, 5},
                          LieType{Family::E, 7}, LieType{Family::G, 2}})
    families.emplace_back(t, small_orbit_list(t));
  for (const auto& [t, orbits] : families) {
    CAPTURE(to_string(t));
    for (const OrbitLabel& a : orbits) {
      CHECK(closure_leq(a, a));
      for (const OrbitLabel& b : orbits) {
        const bool ab = closure_leq(a, b), ba = closure_leq(b, a);
        if (ab && ba) CHECK(a == b);
        if (ab && !(a == b)) CHECK(orbit_dimension(a) < orbit_dimension(b));
        if (!ab) continue;
        for (const OrbitLabel& c : orbits)
          if (closure_leq(b, c)) CHECK(closure_leq(a, c));
      }
    }
  }
}

TEST_CASE("weighted Dynkin diagrams of classical orbits") {
  auto wdd = [](const LieType& t, const IVec& p,
                VeryEvenTag tag = VeryEvenTag::None) {
    return weighted_dynkin_classical(make_classical_orbit(t, p, tag)).coords;
  };
  CHECK(wdd({Family::A, 3}, {2, 1, 1}) == IVec({1, 0, 0, -1}));
  CHECK(wdd({Family::A, 2}, {3}) == IVec({2, 0, -2}));
  CHECK(wdd({Family::A, 3}, {1, 1, 1, 1}) == IVec({0, 0, 0, 0}));
  CHECK(wdd({Family::B, 4}, {3, 2, 2, 1, 1}) == IVec({2, 1, 1, 0}));
  CHECK(wdd({Family::B, 2}, {1, 1, 1, 1, 1}) == IVec({0, 0}));
  CHECK(wdd({Family::C, 3}, {2, 2, 1, 1}) == IVec({1, 1, 0}));
  CHECK(wdd({Family::D, 4}, {2, 2, 2, 2}, VeryEvenTag::I) == IVec({1, 1, 1, 1}));
  CHECK(wdd({Family::D, 4}, {2, 2, 2, 2}, VeryEvenTag::II) == IVec({1, 1, 1, -1}));
  CHECK(wdd({Family::D, 4}, {3, 3, 1, 1}) == IVec({2, 2, 0, 0}));
}

TEST_CASE("orbit display and parsing round trips") {
  const LieType b4{Family::B, 4};
  const OrbitLabel o = make_classical_orbit(b4, {3, 3, 1, 1, 1});
  CHECK(orbit_display(o) == "3^2.1^3");
  CHECK(parse_orbit(b4, "3^2.1^3") == o);
  const LieType d4{Family::D, 4};
  const OrbitLabel ve = make_classical_orbit(d4, {2, 2, 2, 2}, VeryEvenTag::I);
  CHECK(orbit_display(ve) == "2^4_I");
  CHECK(parse_orbit(d4, "2^4_I") == ve);
  CHECK(parse_orbit(d4, "2^4_II").tag == VeryEvenTag::II);
  const LieType e6{Family::E, 6};
  const OrbitLabel bc = make_exceptional_orbit(e6, "A2+A1");
  CHECK(orbit_display(bc) == "A2+A1");
  CHECK(parse_orbit(e6, "A2+A1") == bc);
  const LieType g2{Family::G, 2};
  CHECK(orbit_display(make_exceptional_orbit(g2, "A1t")) == "A1t");
  for (const LieType& t : {LieType{Family::B, 4}, LieType{Family::D, 5},
                           LieType{Family::E, 7}, LieType{Family::F, 4}})
    for (const OrbitLabel& x : small_orbit_list(t))
      CHECK(parse_orbit(t, orbit_display(x)) == x);
  CHECK_THROWS_AS(parse_orbit(b4, "not an orbit"), std::invalid_argument);
}

TEST_CASE("exceptional orbit data") {
  const LieType g2{Family::G, 2}, f4{Family::F, 4};
  CHECK(orbit_dimension(make_exceptional_orbit(g2, "G2(a1)")) == 10);
  CHECK(orbit_dimension(make_exceptional_orbit(g2, "A1t")) == 8);
  CHECK(orbit_dimension(make_exceptional_orbit(f4, "A2")) == 30);
  CHECK(orbit_dimension(make_exceptional_orbit(f4, "A1+A1t")) == 28);
  CHECK(closure_leq(make_exceptional_orbit(g2, "A1t"),
                    make_exceptional_orbit(g2, "G2(a1)")));
  CHECK(!closure_leq(make_exceptional_orbit(g2, "G2(a1)"),
                     make_exceptional_orbit(g2, "A1t")));
  // labels are validated at lookup time against the bundled tables
  CHECK_THROWS_AS(orbit_dimension(make_exceptional_orbit(g2, "E8(a7)")),
                  std::invalid_argument);
  CHECK_THROWS_AS(closure_leq(make_exceptional_orbit(g2, "E8(a7)"),
                              make_exceptional_orbit(g2, "A1t")),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_exceptional_orbit({Family::B, 4}, "A1"),
                  std::invalid_argument);
}
