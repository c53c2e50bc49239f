// SPDX-License-Identifier: MIT
#include "reederkit/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reederkit {

namespace {

// cartan[i][j] = <alpha_i, alphacheck_j> in Bourbaki numbering (0-based in
// code).  This is the transpose of the "rows = coroots" convention; with it,
// the fundamental coordinates of alphacheck_j are exactly column j.
IMat cartan_matrix(const LieType& t) {
  const int n = t.rank;
  IMat c(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j, long long cij, long long cji) {
    c[i][j] = cij;
    c[j][i] = cji;
  };
  auto chain = [&](int i, int j) { bond(i, j, -1, -1); };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      // alpha_{n-1} long, alpha_n short: <alpha_{n-1}, alphacheck_n> = -2.
      bond(n - 2, n - 1, -2, -1);
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      // alpha_{n-1} short, alpha_n long: <alpha_n, alphacheck_{n-1}> = -2.
      bond(n - 2, n - 1, -1, -2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case Family::E:
      chain(0, 2);
      chain(2, 3);
      chain(3, 4);
      chain(4, 5);
      if (n >= 7) chain(5, 6);
      if (n >= 8) chain(6, 7);
      chain(1, 3);
      break;
    case Family::F:
      chain(0, 1);
      bond(1, 2, -2, -1);
      chain(2, 3);
      break;
    case Family::G:
      bond(0, 1, -1, -3);
      break;
  }
  return c;
}

std::size_t positive_root_count(const LieType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

// Closure of the simple (co)roots under all simple reflections; `row` selects
// the pairing direction: reflecting root coords a by s_j subtracts
// (sum_i a_i cartan[i][j]) e_j, reflecting coroot coords b by s_i subtracts
// (sum_j cartan[i][j] b_j) e_i.
IMat reflection_closure(const IMat& cartan, bool roots) {
  const int n = static_cast<int>(cartan.size());
  std::set<IVec> seen;
  std::vector<IVec> queue;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IVec a = queue.back();
    queue.pop_back();
    for (int j = 0; j < n; ++j) {
      long long pairing = 0;
      for (int i = 0; i < n; ++i)
        pairing += roots ? a[i] * cartan[i][j] : cartan[j][i] * a[i];
      IVec b = a;
      b[j] -= pairing;
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  IMat positives;
  for (const auto& a : seen) {
    bool nonneg = std::all_of(a.begin(), a.end(), [](long long x) { return x >= 0; });
    if (nonneg) positives.push_back(a);
  }
  return positives;
}

// Symmetrizer: coroot_norm[j] = (alphacheck_j, alphacheck_j)/2, normalized to
// minimum 1, determined by eps_j * cartan[j][i] = eps_i * cartan[i][j].
IVec symmetrizer(const IMat& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<Rat> eps(n, Rat(0));
  eps[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || cartan[i][j] == 0 || eps[j] != 0) continue;
      eps[j] = eps[i] * Rat(cartan[i][j]) / Rat(cartan[j][i]);
      stack.push_back(j);
    }
  }
  Rat lo = eps[0];
  for (const auto& e : eps) {
    if (e == 0) throw std::logic_error("symmetrizer: disconnected diagram");
    lo = std::min(lo, e);
  }
  IVec out;
  for (auto& e : eps) {
    const Rat v = e / lo;
    if (denominator(v) != 1) throw std::logic_error("symmetrizer: non-integral");
    out.push_back(numerator(v).convert_to<long long>());
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (out[j] * cartan[j][i] != out[i] * cartan[i][j])
        throw std::logic_error("symmetrizer: asymmetric result");
  return out;
}

IVec mat_apply(const IMat& m, const IVec& v) {
  IVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

std::unique_ptr<RootDatum> build_datum(const LieType& type) {
  validate(type);
  auto rd = std::make_unique<RootDatum>();
  rd->type = type;
  rd->rank = type.rank;
  rd->cartan = cartan_matrix(type);
  rd->cartan_inv = qmat_inverse(qmat_from_int(rd->cartan));
  rd->coroot_norm = symmetrizer(rd->cartan);
  rd->positive_roots = reflection_closure(rd->cartan, /*roots=*/true);
  rd->positive_coroots = reflection_closure(rd->cartan, /*roots=*/false);
  if (rd->positive_roots.size() != positive_root_count(type) ||
      rd->positive_coroots.size() != positive_root_count(type))
    throw std::logic_error("root closure has unexpected size for " + to_string(type));

  rd->two_rho.assign(rd->rank, 0);
  for (const auto& a : rd->positive_roots)
    for (int i = 0; i < rd->rank; ++i) rd->two_rho[i] += a[i];

  // Highest root: the dominant positive root of maximal height.  (Outside
  // the simply laced types the highest short root is dominant too, so
  // dominance alone does not single it out.)
  int found = 0;
  long long best_height = -1;
  for (const auto& a : rd->positive_roots) {
    IVec w(rd->rank, 0);
    for (int j = 0; j < rd->rank; ++j)
      for (int i = 0; i < rd->rank; ++i) w[j] += a[i] * rd->cartan[i][j];
    if (!is_dominant(w)) continue;
    long long height = 0;
    for (long long c : a) height += c;
    if (height > best_height) {
      best_height = height;
      rd->highest_root = a;
      found = 1;
    } else if (height == best_height) {
      ++found;
    }
  }
  if (found != 1) throw std::logic_error("highest root not unique");

  // alphacheck_0: dominant short coroot (norm 2 under the normalization).
  found = 0;
  for (const auto& b : rd->positive_coroots) {
    const IVec g = mat_apply(rd->cartan, b);  // fundamental coords
    long long norm = 0;
    for (int j = 0; j < rd->rank; ++j) norm += rd->coroot_norm[j] * g[j] * b[j];
    if (norm == 2 && is_dominant(g)) {
      rd->highest_short_coroot = b;
      ++found;
    }
  }
  if (found != 1) throw std::logic_error("highest short coroot not unique");

  rd->minus_w0_perm.assign(rd->rank, -1);
  for (int i = 0; i < rd->rank; ++i) {
    IVec f(rd->rank, 0);
    f[i] = -1;
    const IVec g = dominant_representative(*rd, f).fund;
    int j = -1;
    for (int k = 0; k < rd->rank; ++k) {
      if (g[k] == 0) continue;
      if (g[k] != 1 || j != -1) throw std::logic_error("-w0 image not fundamental");
      j = k;
    }
    rd->minus_w0_perm[i] = j;
  }
  for (int i = 0; i < rd->rank; ++i)
    if (rd->minus_w0_perm[rd->minus_w0_perm[i]] != i)
      throw std::logic_error("-w0 not an involution");
  return rd;
}

void check_length(const IVec& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    std::ostringstream os;
    os << what << ": expected " << n << " coordinates, got " << v.size();
    throw std::invalid_argument(os.str());
  }
}

IVec classical_to_fundamental(const LieType& t, const IVec& a) {
  const int n = t.rank;
  check_length(a, static_cast<std::size_t>(classical_tuple_length(t)), "classical coords");
  IVec f(n, 0);
  switch (t.family) {
    case Family::A: {
      if (std::accumulate(a.begin(), a.end(), 0LL) != 0)
        throw std::invalid_argument("type A classical coords must sum to zero");
      for (int i = 0; i < n; ++i) f[i] = a[i] - a[i + 1];
      break;
    }
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) f[i] = a[i] - a[i + 1];
      f[n - 1] = a[n - 1];
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) f[i] = a[i] - a[i + 1];
      f[n - 1] = 2 * a[n - 1];
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) f[i] = a[i] - a[i + 1];
      f[n - 2] = a[n - 2] - a[n - 1];
      f[n - 1] = a[n - 2] + a[n - 1];
      break;
    default:
      throw std::invalid_argument("no classical coordinates for " + to_string(t));
  }
  return f;
}

long long exact_half(long long x, const char* what) {
  if (x % 2 != 0) {
    std::ostringstream os;
    os << what << ": non-integral coordinate " << x << "/2";
    throw std::invalid_argument(os.str());
  }
  return x / 2;
}

IVec fundamental_to_classical(const LieType& t, const IVec& f) {
  const int n = t.rank;
  check_length(f, static_cast<std::size_t>(n), "fundamental coords");
  switch (t.family) {
    case Family::A: {
      // a_i - a_{i+1} = f_i with sum(a) = 0: integral iff (n+1) | sum(i*f_i).
      long long weighted = 0;
      for (int i = 0; i < n; ++i) weighted += (i + 1) * f[i];
      if (weighted % (n + 1) != 0) {
        std::ostringstream os;
        os << "type A fundamental->classical: non-integral coordinate "
           << Rat(-weighted, n + 1);
        throw std::invalid_argument(os.str());
      }
      IVec a(n + 1, 0);
      a[n] = -weighted / (n + 1);
      for (int i = n - 1; i >= 0; --i) a[i] = a[i + 1] + f[i];
      return a;
    }
    case Family::B: {
      IVec a(n, 0);
      a[n - 1] = f[n - 1];
      for (int i = n - 2; i >= 0; --i) a[i] = a[i + 1] + f[i];
      return a;
    }
    case Family::C: {
      IVec a(n, 0);
      a[n - 1] = exact_half(f[n - 1], "type C fundamental->classical");
      for (int i = n - 2; i >= 0; --i) a[i] = a[i + 1] + f[i];
      return a;
    }
    case Family::D: {
      IVec a(n, 0);
      a[n - 1] = exact_half(f[n - 1] - f[n - 2], "type D fundamental->classical");
      a[n - 2] = exact_half(f[n - 1] + f[n - 2], "type D fundamental->classical");
      for (int i = n - 3; i >= 0; --i) a[i] = a[i + 1] + f[i];
      return a;
    }
    default:
      throw std::invalid_argument("no classical coordinates for " + to_string(t));
  }
}

}  // namespace

const RootDatum& build_root_system(const LieType& type) {
  validate(type);
  static std::mutex mu;
  static std::map<LieType, std::unique_ptr<RootDatum>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, build_datum(type)).first;
  return *it->second;
}

Coweight make_coweight(const LieType& type, Basis basis, IVec coords) {
  validate(type);
  if (basis == Basis::Classical) {
    check_length(coords, static_cast<std::size_t>(classical_tuple_length(type)),
                 "classical coords");
    if (type.family == Family::A &&
        std::accumulate(coords.begin(), coords.end(), 0LL) != 0)
      throw std::invalid_argument("type A classical coords must sum to zero");
  } else {
    check_length(coords, static_cast<std::size_t>(type.rank), "coords");
  }
  return Coweight{type, basis, std::move(coords)};
}

Coweight convert_basis(const RootDatum& rd, const Coweight& cw, Basis target) {
  if (cw.type != rd.type)
    throw std::invalid_argument("coweight type does not match root datum");
  // Normalize through fundamental coordinates.
  IVec fund;
  switch (cw.basis) {
    case Basis::Fundamental:
      check_length(cw.coords, static_cast<std::size_t>(rd.rank), "fundamental coords");
      fund = cw.coords;
      break;
    case Basis::Coroot: {
      check_length(cw.coords, static_cast<std::size_t>(rd.rank), "coroot coords");
      fund = mat_apply(rd.cartan, cw.coords);
      break;
    }
    case Basis::Classical:
      fund = classical_to_fundamental(rd.type, cw.coords);
      break;
  }
  switch (target) {
    case Basis::Fundamental:
      return Coweight{rd.type, target, fund};
    case Basis::Coroot:
      return Coweight{rd.type, target, coroot_coords(rd, fund)};
    case Basis::Classical:
      return Coweight{rd.type, target, fundamental_to_classical(rd.type, fund)};
  }
  throw std::logic_error("unreachable");
}

IVec fundamental_coords(const RootDatum& rd, const Coweight& cw) {
  return convert_basis(rd, cw, Basis::Fundamental).coords;
}

bool in_coroot_lattice(const RootDatum& rd, const IVec& fund) {
  QVec f(fund.begin(), fund.end());
  QVec c(rd.rank, Rat(0));
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) c[i] += rd.cartan_inv[i][j] * f[j];
  return qvec_is_integral(c);
}

IVec coroot_coords(const RootDatum& rd, const IVec& fund) {
  check_length(fund, static_cast<std::size_t>(rd.rank), "fundamental coords");
  QVec c(rd.rank, Rat(0));
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) c[i] += rd.cartan_inv[i][j] * Rat(fund[j]);
  return qvec_to_ivec(c, "coroot coords of " + to_string(rd.type) + " coweight");
}

bool dominance_leq(const RootDatum& rd, const IVec& fund_a, const IVec& fund_b) {
  check_length(fund_a, static_cast<std::size_t>(rd.rank), "fundamental coords");
  check_length(fund_b, static_cast<std::size_t>(rd.rank), "fundamental coords");
  QVec c(rd.rank, Rat(0));
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j)
      c[i] += rd.cartan_inv[i][j] * Rat(fund_b[j] - fund_a[j]);
  for (const auto& x : c)
    if (denominator(x) != 1 || x < 0) return false;
  return true;
}

DominantRep dominant_representative(const RootDatum& rd, IVec fund) {
  check_length(fund, static_cast<std::size_t>(rd.rank), "fundamental coords");
  DominantRep rep;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rd.rank; ++i)
      if (fund[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    const long long fj = fund[neg];
    for (int k = 0; k < rd.rank; ++k) fund[k] -= fj * rd.cartan[k][neg];
    ++rep.length;
    if (rep.length > 1000000)
      throw std::logic_error("dominant_representative: failed to terminate");
  }
  rep.fund = std::move(fund);
  return rep;
}

IVec minus_w0(const RootDatum& rd, const IVec& fund) {
  IVec neg(fund.size());
  for (std::size_t i = 0; i < fund.size(); ++i) neg[i] = -fund[i];
  return dominant_representative(rd, std::move(neg)).fund;
}

long long pairing_two_rho(const RootDatum& rd, const IVec& fund) {
  check_length(fund, static_cast<std::size_t>(rd.rank), "fundamental coords");
  long long s = 0;
  for (int i = 0; i < rd.rank; ++i) s += rd.two_rho[i] * fund[i];
  return s;
}

long long sym_pairing(const RootDatum& rd, const IVec& fund, const IVec& coroot) {
  long long s = 0;
  for (int j = 0; j < rd.rank; ++j) s += rd.coroot_norm[j] * fund[j] * coroot[j];
  return s;
}

Rat norm2(const RootDatum& rd, const IVec& fund) {
  QVec c(rd.rank, Rat(0));
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) c[i] += rd.cartan_inv[i][j] * Rat(fund[j]);
  Rat s = 0;
  for (int j = 0; j < rd.rank; ++j) s += Rat(rd.coroot_norm[j] * fund[j]) * c[j];
  return s;
}

std::string coweight_display(const RootDatum& rd, const IVec& fund) {
  if (is_classical(rd.type)) {
    const IVec a = fundamental_to_classical(rd.type, fund);
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) os << ',';
      os << a[i];
    }
    return os.str();
  }
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rd.rank; ++i) {
    if (fund[i] == 0) continue;
    const long long k = fund[i];
    if (k > 0 && !first) os << '+';
    if (k == -1)
      os << '-';
    else if (k != 1)
      os << k;
    os << 'w' << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

IVec parse_coweight(const RootDatum& rd, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty coweight");
  if (s.find(',') != std::string::npos) {
    if (!is_classical(rd.type))
      throw std::invalid_argument("classical tuples are not defined for " +
                                  to_string(rd.type));
    IVec a;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      const std::string tok = s.substr(pos, next - pos);
      try {
        std::size_t used = 0;
        a.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad classical coordinate '" + tok + "'");
      }
      pos = next + 1;
    }
    return classical_to_fundamental(rd.type, a);
  }
  if (s == "0") return IVec(rd.rank, 0);
  // Fundamental combination: [coef]w<idx> joined by '+'/'-'.
  IVec fund(rd.rank, 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    long long sign = 1;
    if (s[pos] == '+') ++pos;
    else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    long long coef = 1;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) coef = std::stoll(s.substr(start, pos - start));
    if (pos >= s.size() || s[pos] != 'w')
      throw std::invalid_argument("bad coweight syntax '" + text + "'");
    ++pos;
    start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start)
      throw std::invalid_argument("bad coweight syntax '" + text + "'");
    const int idx = std::stoi(s.substr(start, pos - start));
    if (idx < 1 || idx > rd.rank)
      throw std::invalid_argument("fundamental index out of range in '" + text + "'");
    fund[idx - 1] += sign * coef;
  }
  return fund;
}

}  // namespace reederkit
