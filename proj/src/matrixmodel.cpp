// SPDX-License-Identifier: MIT
#include "reederkit/matrixmodel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace reederkit {
namespace {

void require_square(const QMat& x, const char* who) {
  if (x.empty() || x.size() != x[0].size())
    throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty");
}

bool qmat_equal(const QMat& a, const QMat& b) { return qmat_is_zero(qmat_sub(a, b)); }

int ambient_size(const LieType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank + 1;
    case Family::C: return 2 * t.rank;
    case Family::D: return 2 * t.rank;
    default:
      throw std::invalid_argument("matrix models exist for the classical types only");
  }
}

/// Exact rational square root; nullopt when the value is not a square.
std::optional<Rat> rat_sqrt(const Rat& v) {
  if (v < 0) return std::nullopt;
  const Int num = boost::multiprecision::numerator(v);
  const Int den = boost::multiprecision::denominator(v);
  const Int rn = boost::multiprecision::sqrt(num);
  const Int rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rat(rn, rd);
}

}  // namespace

LaurentMatrix laurent_identity(int n) {
  LaurentMatrix g;
  g.n = n;
  g.coeffs = {qmat_identity(n)};
  return g;
}

LaurentMatrix laurent_from_parts(std::vector<QMat> parts) {
  if (parts.empty()) throw std::invalid_argument("laurent_from_parts: no coefficients");
  LaurentMatrix g;
  g.n = static_cast<int>(parts[0].size());
  for (const QMat& p : parts) {
    require_square(p, "laurent_from_parts");
    if (static_cast<int>(p.size()) != g.n)
      throw std::invalid_argument("laurent_from_parts: mixed coefficient sizes");
  }
  g.coeffs = std::move(parts);
  laurent_trim(g);
  return g;
}

void laurent_trim(LaurentMatrix& g) {
  while (g.coeffs.size() > 1 && qmat_is_zero(g.coeffs.back())) g.coeffs.pop_back();
}

bool laurent_equal(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n != b.n) return false;
  const std::size_t k = std::max(a.coeffs.size(), b.coeffs.size());
  const QMat zero = qmat_zero(a.n, a.n);
  for (std::size_t i = 0; i < k; ++i) {
    const QMat& xa = i < a.coeffs.size() ? a.coeffs[i] : zero;
    const QMat& xb = i < b.coeffs.size() ? b.coeffs[i] : zero;
    if (!qmat_equal(xa, xb)) return false;
  }
  return true;
}

LaurentMatrix laurent_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("laurent_mul: size mismatch");
  LaurentMatrix c;
  c.n = a.n;
  c.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, qmat_zero(a.n, a.n));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      c.coeffs[i + j] = qmat_add(c.coeffs[i + j], qmat_mul(a.coeffs[i], b.coeffs[j]));
  laurent_trim(c);
  return c;
}

LaurentMatrix laurent_inverse(const LaurentMatrix& g, int max_support) {
  if (g.coeffs.empty()) throw std::invalid_argument("laurent_inverse: empty element");
  QMat c0inv;
  try {
    c0inv = qmat_inverse(g.coeffs[0]);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("laurent_inverse: constant term is singular");
  }
  LaurentMatrix y;
  y.n = g.n;
  y.coeffs = {c0inv};
  for (int k = 1; k <= max_support; ++k) {
    QMat acc = qmat_zero(g.n, g.n);
    for (std::size_t i = 1; i < g.coeffs.size() && i <= static_cast<std::size_t>(k); ++i)
      acc = qmat_add(acc, qmat_mul(g.coeffs[i], y.coeffs[k - i]));
    y.coeffs.push_back(qmat_scale(qmat_mul(c0inv, acc), Rat(-1)));
  }
  laurent_trim(y);
  if (!laurent_equal(laurent_mul(g, y), laurent_identity(g.n)))
    throw std::domain_error("laurent_inverse: inverse support exceeds the truncation bound");
  return y;
}

LaurentMatrix iota(const LaurentMatrix& g, int truncation) {
  LaurentMatrix h = g;
  laurent_trim(h);
  for (std::size_t k = 1; k < h.coeffs.size(); k += 2)
    h.coeffs[k] = qmat_scale(h.coeffs[k], Rat(-1));
  const int support = static_cast<int>(h.coeffs.size()) - 1;
  return laurent_inverse(h, truncation > 0 ? truncation : 4 * support);
}

QMat pi_dagger(const LaurentMatrix& g) {
  if (g.coeffs.empty() || !qmat_equal(g.coeffs[0], qmat_identity(g.n)))
    throw std::invalid_argument("pi_dagger: constant term must be the identity");
  return g.coeffs.size() > 1 ? g.coeffs[1] : qmat_zero(g.n, g.n);
}

LaurentMatrix exp_tinv(const QMat& x) {
  require_square(x, "exp_tinv");
  const int n = static_cast<int>(x.size());
  LaurentMatrix g = laurent_identity(n);
  QMat power = qmat_identity(n);
  Rat factorial = 1;
  for (int k = 1; k <= n; ++k) {
    power = qmat_mul(power, x);
    if (qmat_is_zero(power)) return g;
    factorial *= k;
    g.coeffs.push_back(qmat_scale(power, Rat(1) / factorial));
  }
  throw std::invalid_argument("exp_tinv: matrix is not nilpotent");
}

Coweight coweight_of_element(const LaurentMatrix& g) {
  LaurentMatrix h = g;
  laurent_trim(h);
  const int n = h.n;
  const int K = static_cast<int>(h.coeffs.size()) - 1;  // most negative exponent is -K

  // det == 1 identically: the determinant is a polynomial of degree <= n*K in
  // u = t^-1, so n*K + 1 matching evaluations pin it down.
  for (int u = 0; u <= n * K; ++u) {
    QMat value = qmat_zero(n, n);
    Rat uk = 1;
    for (int k = 0; k <= K; ++k) {
      value = qmat_add(value, qmat_scale(h.coeffs[k], uk));
      uk *= u;
    }
    if (qmat_det(value) != 1)
      throw std::invalid_argument("coweight_of_element: determinant is not 1");
  }

  // Rank sequence of the upper block-Toeplitz matrices built from the
  // coefficients x_N, x_{N+1}, ..., x_0 (N = -K): the increments delta_s
  // count the indices j with a_j - a_n < s.
  std::vector<long long> delta;
  long long prev = 0;
  const int s_max = n * K + 2;
  for (int s = 1; s <= s_max; ++s) {
    QMat toeplitz = qmat_zero(static_cast<std::size_t>(s) * n, static_cast<std::size_t>(s) * n);
    for (int bi = 0; bi < s; ++bi)
      for (int bj = bi; bj < s && bj - bi <= K; ++bj) {
        const QMat& block = h.coeffs[K - (bj - bi)];
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) toeplitz[bi * n + r][bj * n + c] = block[r][c];
      }
    const long long rank = static_cast<long long>(qmat_rank(std::move(toeplitz)));
    delta.push_back(rank - prev);
    prev = rank;
    if (delta.back() == n) break;
  }
  if (delta.back() != n)
    throw std::logic_error("coweight_of_element: rank sequence did not saturate");

  IVec a;
  long long before = 0;
  for (std::size_t k = 0; k < delta.size(); ++k) {
    const long long count = delta[k] - before;
    if (count < 0) throw std::logic_error("coweight_of_element: rank sequence inconsistent");
    for (long long i = 0; i < count; ++i) a.push_back(static_cast<long long>(k) - K);
    before = delta[k];
  }
  std::sort(a.begin(), a.end(), std::greater<>());
  if (std::accumulate(a.begin(), a.end(), 0LL) != 0)
    throw std::logic_error("coweight_of_element: entries do not sum to zero");
  return make_coweight({Family::A, n - 1}, Basis::Classical, a);
}

IVec jordan_type(const QMat& x) {
  require_square(x, "jordan_type");
  const int n = static_cast<int>(x.size());
  std::vector<long long> ranks{n};  // ranks[s] = rank(x^s)
  QMat power = qmat_identity(n);
  while (!qmat_is_zero(power = qmat_mul(power, x))) {
    ranks.push_back(static_cast<long long>(qmat_rank(power)));
    if (static_cast<int>(ranks.size()) > n)
      throw std::invalid_argument("jordan_type: matrix is not nilpotent");
  }
  ranks.push_back(0);
  // parts >= s: c_s = rank(x^{s-1}) - rank(x^s)
  std::vector<long long> c;
  for (std::size_t s = 1; s < ranks.size(); ++s) c.push_back(ranks[s - 1] - ranks[s]);
  IVec parts;
  for (std::size_t s = c.size(); s-- > 0;) {
    const long long next = s + 1 < c.size() ? c[s + 1] : 0;
    for (long long i = 0; i < c[s] - next; ++i) parts.push_back(static_cast<long long>(s) + 1);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

bool is_anti_self_adjoint(const QMat& x, const BilinearForm& form) {
  return qmat_is_zero(
      qmat_add(qmat_mul(qmat_transpose(x), form.gram), qmat_mul(form.gram, x)));
}

bool preserves_form(const LaurentMatrix& g, const BilinearForm& form) {
  LaurentMatrix gt = g;
  for (QMat& c : gt.coeffs) c = qmat_transpose(c);
  LaurentMatrix gram;
  gram.n = g.n;
  gram.coeffs = {form.gram};
  LaurentMatrix lhs = laurent_mul(laurent_mul(gt, gram), g);
  return laurent_equal(lhs, gram);
}

namespace {

struct BlockPlan {
  long long size = 0;
  bool doublet = false;  // J_b + (-J_b^T) with hyperbolic pairing
  int sign = 1;          // self-paired blocks only
};

/// Self-paired blocks carry the form (v_i, v_j) = s (-1)^i [i + j == b + 1],
/// which is symmetric for odd b and alternating for even b; the shift map
/// v_i -> v_{i-1} is anti-self-adjoint for it.  Sizes that have the wrong
/// parity come in pairs and are realized as J_b + (-J_b^T) against a
/// hyperbolic form.  Repeated self-paired sizes alternate the sign s so that
/// the form induced on the image of x^2 splits over Q.
std::vector<BlockPlan> plan_blocks(const LieType& lt, const IVec& partition) {
  const bool alternating = lt.family == Family::C;
  std::map<long long, long long> mult;
  for (long long p : partition) ++mult[p];
  std::vector<BlockPlan> plan;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    const auto [size, count] = *it;
    const bool self_paired = alternating ? size % 2 == 0 : size % 2 == 1;
    if (self_paired) {
      for (long long i = 0; i < count; ++i)
        plan.push_back({size, false, i % 2 == 0 ? 1 : -1});
    } else {
      if (count % 2 != 0)
        throw std::logic_error("orbit partition has an unpairable part");
      for (long long i = 0; i < count / 2; ++i) plan.push_back({size, true, 1});
    }
  }
  return plan;
}

}  // namespace

NilpotentModel build_nilpotent(const LieType& lt, const OrbitLabel& label, unsigned seed) {
  validate(lt);
  if (!is_classical(lt))
    throw std::invalid_argument("matrix models exist for the classical types only");
  if (label.type != lt)
    throw std::invalid_argument("orbit label belongs to " + to_string(label.type) +
                                ", not " + to_string(lt));
  const int N = ambient_size(lt);
  SmallIntRng rng(seed);

  NilpotentModel model;
  model.x = qmat_zero(N, N);

  if (lt.family == Family::A) {
    int at = 0;
    for (long long part : label.partition) {
      for (long long i = 1; i < part; ++i) model.x[at + i - 1][at + i] = 1;
      at += static_cast<int>(part);
    }
    // Conjugate by a product of random shears (determinant one, exact).
    QMat r = qmat_identity(N);
    QMat rinv = qmat_identity(N);
    for (int k = 0; k < 2 * N; ++k) {
      const int i = static_cast<int>(rng.pick(0, N - 1));
      const int j = static_cast<int>(rng.pick(0, N - 1));
      if (i == j) continue;
      const Rat c = rng.pick(-2, 2);
      QMat shear = qmat_identity(N);
      shear[i][j] = c;
      QMat unshear = qmat_identity(N);
      unshear[i][j] = -c;
      r = qmat_mul(shear, r);
      rinv = qmat_mul(rinv, unshear);
    }
    model.x = qmat_mul(r, qmat_mul(model.x, rinv));
  } else {
    const bool alternating = lt.family == Family::C;
    QMat gram = qmat_zero(N, N);
    int at = 0;
    for (const BlockPlan& blk : plan_blocks(lt, label.partition)) {
      const int b = static_cast<int>(blk.size);
      if (!blk.doublet) {
        for (int i = 1; i < b; ++i) model.x[at + i - 1][at + i] = 1;
        for (int i = 1; i <= b; ++i) {
          const int j = b + 1 - i;
          gram[at + i - 1][at + j - 1] = Rat(blk.sign * (i % 2 == 0 ? 1 : -1));
        }
        at += b;
      } else {
        for (int i = 1; i < b; ++i) {
          model.x[at + i - 1][at + i] = 1;                  // J_b
          model.x[at + b + i][at + b + i - 1] = -1;         // -J_b^T
        }
        for (int i = 0; i < b; ++i) {
          gram[at + i][at + b + i] = 1;
          gram[at + b + i][at + i] = alternating ? -1 : 1;
        }
        at += 2 * b;
      }
    }
    model.form = BilinearForm{gram, alternating};
    if (!is_anti_self_adjoint(model.x, *model.form))
      throw std::logic_error("build_nilpotent: block model is not anti-self-adjoint");

    // Conjugate by a Cayley transform of a random anti-self-adjoint matrix;
    // this preserves the form exactly.  Retry when 1 + A is singular.
    const QMat gram_inv = qmat_inverse(gram);
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 32)
        throw std::logic_error("build_nilpotent: no invertible Cayley transform found");
      QMat r = qmat_zero(N, N);
      for (auto& row : r)
        for (auto& v : row) v = rng.pick(-2, 2);
      // A = R - G^-1 R^T G is anti-self-adjoint for both form parities.
      const QMat a =
          qmat_sub(r, qmat_mul(gram_inv, qmat_mul(qmat_transpose(r), gram)));
      const QMat id = qmat_identity(N);
      const QMat one_plus = qmat_add(id, a);
      if (qmat_det(one_plus) == 0) continue;
      const QMat cay = qmat_mul(qmat_sub(id, a), qmat_inverse(one_plus));
      model.x = qmat_mul(cay, qmat_mul(model.x, qmat_inverse(cay)));
      break;
    }
    if (!is_anti_self_adjoint(model.x, *model.form))
      throw std::logic_error("build_nilpotent: conjugation broke anti-self-adjointness");
  }

  IVec want = label.partition;
  std::sort(want.begin(), want.end(), std::greater<>());
  while (!want.empty() && want.back() == 1) want.pop_back();
  IVec got = jordan_type(model.x);
  while (!got.empty() && got.back() == 1) got.pop_back();
  if (got != want)
    throw std::logic_error("build_nilpotent: Jordan type mismatch for " + orbit_display(label));
  return model;
}

std::pair<QMat, QMat> x2_decomposition(const QMat& x, const BilinearForm& form) {
  require_square(x, "x2_decomposition");
  const int n = static_cast<int>(x.size());
  if (!is_anti_self_adjoint(x, form))
    throw std::invalid_argument("x2_decomposition: matrix is not anti-self-adjoint");
  const QMat x2 = qmat_mul(x, x);
  if (!qmat_is_zero(qmat_mul(x2, x)))
    throw std::invalid_argument("x2_decomposition: x^3 != 0");
  if (qmat_rank(x2) != 2)
    throw std::invalid_argument("x2_decomposition: rank(x^2) != 2");

  // Two independent columns of x^2 give preimage vectors e_{j1}, e_{j2}.
  auto column = [&](int j) {
    QVec col(n);
    for (int r = 0; r < n; ++r) col[r] = x2[r][j];
    return col;
  };
  int j1 = -1, j2 = -1;
  for (int j = 0; j < n && j2 < 0; ++j) {
    bool zero = true;
    for (int r = 0; r < n; ++r) zero = zero && x2[r][j] == 0;
    if (zero) continue;
    if (j1 < 0) {
      j1 = j;
      continue;
    }
    QMat test = qmat_zero(n, 2);
    for (int r = 0; r < n; ++r) {
      test[r][0] = x2[r][j1];
      test[r][1] = x2[r][j];
    }
    if (qmat_rank(test) == 2) j2 = j;
  }
  if (j2 < 0) throw std::logic_error("x2_decomposition: could not find an image basis");

  // The pairing <x^2 v, x^2 w> := (v, x^2 w) is well defined and symmetric on
  // the image of x^2; its rational isotropic lines split x^2.
  const QMat gx2 = qmat_mul(form.gram, x2);
  const Rat a = gx2[j1][j1], b = gx2[j1][j2], d = gx2[j2][j2];
  std::vector<std::pair<Rat, Rat>> lines;  // coordinates over (col j1, col j2)
  if (a == 0 && d == 0 && b == 0)
    throw std::domain_error("x2_decomposition: induced form is degenerate");
  if (a == 0) {
    lines.emplace_back(1, 0);
    if (b == 0) throw std::domain_error("x2_decomposition: induced form is degenerate");
    lines.emplace_back(-d, 2 * b);
  } else {
    const std::optional<Rat> s = rat_sqrt(b * b - a * d);
    if (!s) throw std::domain_error("x2_decomposition: induced form does not split over Q");
    if (*s == 0) throw std::domain_error("x2_decomposition: induced form is degenerate");
    lines.emplace_back((-b + *s) / a, 1);
    lines.emplace_back((-b - *s) / a, 1);
  }

  // Primitive integer direction vectors of the two image lines.
  std::vector<IVec> dirs;
  for (const auto& [c1, c2] : lines) {
    QVec u(n, 0);
    const QVec w1 = column(j1), w2 = column(j2);
    for (int r = 0; r < n; ++r) u[r] = c1 * w1[r] + c2 * w2[r];
    Int lcm = 1;
    for (const Rat& v : u) {
      const Int den = boost::multiprecision::denominator(v);
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    IVec iu;
    Int gcd = 0;
    for (const Rat& v : u) {
      const Rat scaled_rat = v * Rat(lcm);
      const Int scaled = boost::multiprecision::numerator(scaled_rat);
      gcd = boost::multiprecision::gcd(gcd, scaled);
      iu.push_back(scaled.convert_to<long long>());
    }
    if (gcd == 0) throw std::logic_error("x2_decomposition: zero isotropic direction");
    const long long g = gcd.convert_to<long long>();
    for (long long& v : iu) v /= g;
    for (long long v : iu) {
      if (v == 0) continue;
      if (v < 0)
        for (long long& w : iu) w = -w;
      break;
    }
    dirs.push_back(std::move(iu));
  }
  if (dirs[1] < dirs[0]) std::swap(dirs[0], dirs[1]);

  // Split each column of x^2 over the two directions.
  QMat basis = qmat_zero(n, 2);
  for (int r = 0; r < n; ++r) {
    basis[r][0] = dirs[0][r];
    basis[r][1] = dirs[1][r];
  }
  QMat y1 = qmat_zero(n, n), y2 = qmat_zero(n, n);
  for (int j = 0; j < n; ++j) {
    const auto sol = qmat_solve(basis, column(j));
    if (!sol) throw std::logic_error("x2_decomposition: column outside the image plane");
    for (int r = 0; r < n; ++r) {
      y1[r][j] = (*sol)[0] * Rat(dirs[0][r]);
      y2[r][j] = (*sol)[1] * Rat(dirs[1][r]);
    }
  }

  if (!qmat_equal(qmat_add(y1, y2), x2) || qmat_rank(y1) != 1 || qmat_rank(y2) != 1)
    throw std::logic_error("x2_decomposition: split failed");
  // Mutually adjoint: G^-1 y1^T G == y2.
  const QMat adj = qmat_mul(qmat_inverse(form.gram), qmat_mul(qmat_transpose(y1), form.gram));
  if (!qmat_equal(adj, y2)) throw std::logic_error("x2_decomposition: pieces are not adjoint");
  return {std::move(y1), std::move(y2)};
}

IVec ambient_coweight(const LieType& t, const IVec& classical) {
  validate(t);
  IVec a;
  switch (t.family) {
    case Family::A:
      a = classical;
      break;
    case Family::B: {
      a = classical;
      a.push_back(0);
      for (auto it = classical.rbegin(); it != classical.rend(); ++it) a.push_back(-*it);
      break;
    }
    case Family::C:
    case Family::D: {
      a = classical;
      for (auto it = classical.rbegin(); it != classical.rend(); ++it) a.push_back(-*it);
      break;
    }
    default:
      throw std::invalid_argument("ambient coweights exist for the classical types only");
  }
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

}  // namespace reederkit
