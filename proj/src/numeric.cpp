// SPDX-License-Identifier: MIT
#include "reederkit/numeric.hpp"

#include <sstream>

namespace reederkit {

std::size_t qmat_rank(QMat a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const Rat inv = Rat(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

QMat qmat_inverse(const QMat& a) {
  const std::size_t n = a.size();
  QMat work = a, inv = qmat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("qmat_inverse: singular matrix");
    std::swap(work[col], work[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rat f = Rat(1) / work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) continue;
      const Rat g = work[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= g * work[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<QVec> qmat_solve(QMat a, QVec b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    std::swap(b[rank], b[pivot]);
    const Rat inv = Rat(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  QVec x(cols, Rat(0));
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
  return x;
}

Rat qmat_det(QMat a) {
  const std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      det = -det;
    }
    det *= a[col][col];
    const Rat inv = Rat(1) / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Rat f = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

bool qvec_is_integral(const QVec& v) {
  for (const auto& x : v)
    if (denominator(x) != 1) return false;
  return true;
}

IVec qvec_to_ivec(const QVec& v, const std::string& what) {
  IVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (denominator(x) != 1) {
      std::ostringstream os;
      os << what << ": non-integral coordinate " << x;
      throw std::invalid_argument(os.str());
    }
    out.push_back(numerator(x).convert_to<long long>());
  }
  return out;
}

}  // namespace reederkit
