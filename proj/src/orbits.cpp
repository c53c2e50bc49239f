// SPDX-License-Identifier: MIT
#include "reederkit/orbits.hpp"

#include "reederkit/paperdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace reederkit {

namespace {

bool is_partition(const IVec& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

long long psum(const IVec& p) { return std::accumulate(p.begin(), p.end(), 0LL); }

/// Multiplicity-of-parity rule: every part with b % 2 == parity occurs an
/// even number of times.
bool parity_mults_even(const IVec& p, int parity) {
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (p[i] % 2 == parity && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

void require_classical(const OrbitLabel& o, const char* what) {
  if (!is_classical(o.type))
    throw std::invalid_argument(std::string(what) + ": classical orbit required, got " +
                                to_string(o.type));
}

}  // namespace

IVec dual_partition(const IVec& p) {
  IVec d;
  for (long long i = 1; !p.empty() && i <= p[0]; ++i) {
    long long c = 0;
    for (long long b : p)
      if (b >= i) ++c;
    d.push_back(c);
  }
  return d;
}

std::vector<IVec> partitions_of(int n) {
  std::vector<IVec> out;
  IVec cur;
  // Descending-lex recursive enumeration.
  auto rec = [&](auto&& self, int rest, long long maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (long long b = std::min<long long>(maxpart, rest); b >= 1; --b) {
      cur.push_back(b);
      self(self, rest - static_cast<int>(b), b);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
  return out;
}

bool is_valid_orbit_partition(const LieType& t, const IVec& p) {
  if (!is_partition(p)) return false;
  switch (t.family) {
    case Family::A: return psum(p) == t.rank + 1;
    case Family::B: return psum(p) == 2LL * t.rank + 1 && parity_mults_even(p, 0);
    case Family::C: return psum(p) == 2LL * t.rank && parity_mults_even(p, 1);
    case Family::D: return psum(p) == 2LL * t.rank && parity_mults_even(p, 0);
    default: return false;
  }
}

bool is_very_even(const LieType& t, const IVec& p) {
  if (t.family != Family::D) return false;
  return std::all_of(p.begin(), p.end(), [](long long b) { return b % 2 == 0; });
}

OrbitLabel make_classical_orbit(const LieType& t, IVec p, VeryEvenTag tag) {
  if (!is_valid_orbit_partition(t, p)) {
    std::ostringstream os;
    os << "invalid " << to_string(t) << " orbit partition [";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "]";
    throw std::invalid_argument(os.str());
  }
  const bool ve = is_very_even(t, p);
  if (ve && tag == VeryEvenTag::None)
    throw std::invalid_argument("very even partition requires an I/II tag");
  if (!ve && tag != VeryEvenTag::None)
    throw std::invalid_argument("I/II tag only applies to very even type D partitions");
  return OrbitLabel{t, std::move(p), tag, {}};
}

OrbitLabel make_exceptional_orbit(const LieType& t, std::string bala_carter) {
  if (!is_exceptional(t))
    throw std::invalid_argument("Bala-Carter labels are for exceptional types");
  return OrbitLabel{t, {}, VeryEvenTag::None, std::move(bala_carter)};
}

long long orbit_dimension(const OrbitLabel& o) {
  if (is_exceptional(o.type))
    return exceptional_orbit_dimension(o.type, o.bala_carter);
  const IVec d = dual_partition(o.partition);
  long long sq = 0;
  for (long long x : d) sq += x * x;
  long long odd = 0;
  for (long long b : o.partition)
    if (b % 2 != 0) ++odd;
  const long long n = o.type.rank;
  switch (o.type.family) {
    case Family::A: {
      const long long N = n + 1;
      return N * N - sq;
    }
    case Family::B: {
      const long long m = 2 * n + 1;
      return (m * m - m) / 2 - (sq - odd) / 2;
    }
    case Family::C:
      return 2 * n * n + n - (sq + odd) / 2;
    case Family::D: {
      const long long m = 2 * n;
      return (m * m - m) / 2 - (sq - odd) / 2;
    }
    default:
      throw std::logic_error("unreachable");
  }
}

bool closure_leq(const OrbitLabel& a, const OrbitLabel& b) {
  if (a.type != b.type)
    throw std::invalid_argument("closure_leq: mismatched types");
  if (is_exceptional(a.type))
    return exceptional_closure_leq(a.type, a.bala_carter, b.bala_carter);
  require_classical(a, "closure_leq");
  if (a.partition == b.partition) return a.tag == b.tag;
  // Dominance order on partitions of the same total.
  long long pa = 0, pb = 0;
  const std::size_t len = std::max(a.partition.size(), b.partition.size());
  for (std::size_t i = 0; i < len; ++i) {
    pa += i < a.partition.size() ? a.partition[i] : 0;
    pb += i < b.partition.size() ? b.partition[i] : 0;
    if (pa > pb) return false;
  }
  return pa == pb;
}

Coweight weighted_dynkin_classical(const OrbitLabel& o) {
  require_classical(o, "weighted_dynkin_classical");
  IVec eigen;
  for (long long b : o.partition)
    for (long long v = b - 1; v >= 1 - b; v -= 2) eigen.push_back(v);
  std::sort(eigen.rbegin(), eigen.rend());
  const int n = o.type.rank;
  IVec a;
  if (o.type.family == Family::A) {
    a = eigen;  // n + 1 entries, summing to zero
  } else {
    a.assign(eigen.begin(), eigen.begin() + n);
    if (o.tag == VeryEvenTag::II) a[n - 1] = -a[n - 1];
  }
  return make_coweight(o.type, Basis::Classical, std::move(a));
}

std::vector<OrbitLabel> small_orbit_list(const LieType& t) {
  validate(t);
  std::vector<OrbitLabel> out;
  const int n = t.rank;
  auto with_ones = [](IVec head, long long ones) {
    for (long long i = 0; i < ones; ++i) head.push_back(1);
    return head;
  };
  switch (t.family) {
    case Family::A:
      for (const auto& p : partitions_of(n + 1)) out.push_back(make_classical_orbit(t, p));
      break;
    case Family::C:
      // [2^j 1^(2n-2j)]
      for (int j = 0; j <= n; ++j)
        out.push_back(make_classical_orbit(t, with_ones(IVec(j, 2), 2LL * n - 2 * j)));
      break;
    case Family::B:
      // [2^(2j) 1^(2n-4j+1)], [3 2^(2j) 1^(2n-4j-2)], [3^2 2^(2j) 1^(2n-4j-5)]
      for (int j = 0; 4 * j <= 2 * n; ++j)
        out.push_back(make_classical_orbit(t, with_ones(IVec(2 * j, 2), 2LL * n - 4 * j + 1)));
      for (int j = 0; 4 * j <= 2 * n - 2; ++j) {
        IVec p{3};
        p.insert(p.end(), 2 * j, 2);
        out.push_back(make_classical_orbit(t, with_ones(p, 2LL * n - 4 * j - 2)));
      }
      for (int j = 0; 4 * j <= 2 * n - 5; ++j) {
        IVec p{3, 3};
        p.insert(p.end(), 2 * j, 2);
        out.push_back(make_classical_orbit(t, with_ones(p, 2LL * n - 4 * j - 5)));
      }
      break;
    case Family::D:
      // [2^(2j) 1^(2n-4j)] (both tags when very even), [3 2^(2j) 1^(2n-4j-3)],
      // [3^2 2^(2j) 1^(2n-4j-6)]
      for (int j = 0; 4 * j <= 2 * n; ++j) {
        IVec p = with_ones(IVec(2 * j, 2), 2LL * n - 4 * j);
        if (is_very_even(t, p)) {
          out.push_back(make_classical_orbit(t, p, VeryEvenTag::I));
          out.push_back(make_classical_orbit(t, p, VeryEvenTag::II));
        } else {
          out.push_back(make_classical_orbit(t, p));
        }
      }
      for (int j = 0; 4 * j <= 2 * n - 3; ++j) {
        IVec p{3};
        p.insert(p.end(), 2 * j, 2);
        out.push_back(make_classical_orbit(t, with_ones(p, 2LL * n - 4 * j - 3)));
      }
      for (int j = 0; 4 * j <= 2 * n - 6; ++j) {
        IVec p{3, 3};
        p.insert(p.end(), 2 * j, 2);
        out.push_back(make_classical_orbit(t, with_ones(p, 2LL * n - 4 * j - 6)));
      }
      break;
    default:
      for (const auto& [label, dim] : exceptional_small_orbits(t))
        out.push_back(make_exceptional_orbit(t, label));
      break;
  }
  std::sort(out.begin(), out.end(), [](const OrbitLabel& a, const OrbitLabel& b) {
    const long long da = orbit_dimension(a), db = orbit_dimension(b);
    if (da != db) return da > db;
    return orbit_display(a) < orbit_display(b);
  });
  return out;
}

std::string orbit_display(const OrbitLabel& o) {
  if (is_exceptional(o.type)) return o.bala_carter;
  std::ostringstream os;
  for (std::size_t i = 0; i < o.partition.size();) {
    std::size_t j = i;
    while (j < o.partition.size() && o.partition[j] == o.partition[i]) ++j;
    if (i) os << '.';
    os << o.partition[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  if (o.tag == VeryEvenTag::I) os << "_I";
  if (o.tag == VeryEvenTag::II) os << "_II";
  return os.str();
}

OrbitLabel parse_orbit(const LieType& t, const std::string& text) {
  if (is_exceptional(t)) return make_exceptional_orbit(t, text);
  std::string s = text;
  VeryEvenTag tag = VeryEvenTag::None;
  if (s.size() > 3 && s.substr(s.size() - 3) == "_II") {
    tag = VeryEvenTag::II;
    s.resize(s.size() - 3);
  } else if (s.size() > 2 && s.substr(s.size() - 2) == "_I") {
    tag = VeryEvenTag::I;
    s.resize(s.size() - 2);
  }
  IVec p;
  std::size_t pos = 0;
  try {
    while (pos < s.size()) {
      std::size_t used = 0;
      const long long part = std::stoll(s.substr(pos), &used);
      pos += used;
      long long mult = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        mult = std::stoll(s.substr(pos), &used);
        pos += used;
      }
      for (long long i = 0; i < mult; ++i) p.push_back(part);
      if (pos < s.size()) {
        if (s[pos] != '.') throw std::invalid_argument(s);
        ++pos;
      }
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad orbit partition '" + text + "'");
  }
  return make_classical_orbit(t, std::move(p), tag);
}

}  // namespace reederkit
