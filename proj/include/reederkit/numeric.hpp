// SPDX-License-Identifier: MIT
//
// Exact arithmetic used throughout the library: arbitrary-precision
// integers/rationals and dense rational linear algebra.  Nothing here is
// numerically approximate; every rank, inverse and solve is exact.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace reederkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Small integer vectors (coordinates of coweights, roots, partitions).
using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

/// Dense rational matrix, row-major.
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline QMat qmat_zero(std::size_t rows, std::size_t cols) {
  return QMat(rows, QVec(cols, Rat(0)));
}

inline QMat qmat_identity(std::size_t n) {
  QMat m = qmat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QMat qmat_from_int(const IMat& a) {
  QMat m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    m[i] = QVec(a[i].begin(), a[i].end());
  return m;
}

inline QMat qmat_transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat t = qmat_zero(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline QMat qmat_mul(const QMat& a, const QMat& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  QMat c = qmat_zero(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline QMat qmat_add(const QMat& a, const QMat& b) {
  QMat c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

inline QMat qmat_sub(const QMat& a, const QMat& b) {
  QMat c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] -= b[i][j];
  return c;
}

inline QMat qmat_scale(const QMat& a, const Rat& s) {
  QMat c = a;
  for (auto& row : c)
    for (auto& v : row) v *= s;
  return c;
}

inline bool qmat_is_zero(const QMat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

/// Exact rank by fraction-aware Gaussian elimination.
std::size_t qmat_rank(QMat a);

/// Exact inverse; throws std::invalid_argument if singular.
QMat qmat_inverse(const QMat& a);

/// Solves a*x = b for a single right-hand side; returns std::nullopt when the
/// system is inconsistent.  `a` need not be square; the solution returned is
/// one particular solution.
std::optional<QVec> qmat_solve(QMat a, QVec b);

/// Exact determinant (Bareiss-style elimination over rationals).
Rat qmat_det(QMat a);

/// True when every entry is an integer.
bool qvec_is_integral(const QVec& v);

/// Converts an integral rational vector; throws if any entry is fractional,
/// embedding the offending value in the message.
IVec qvec_to_ivec(const QVec& v, const std::string& what);

/// Deterministic small-integer generator for seeded constructions: values in
/// [lo, hi] drawn from a seeded mt19937_64.
class SmallIntRng {
 public:
  explicit SmallIntRng(std::uint64_t seed) : gen_(seed) {}
  long long pick(long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(gen_);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace reederkit
