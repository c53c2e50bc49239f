// SPDX-License-Identifier: MIT
#include "reederkit/multiplicity.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace reederkit {

namespace {

IVec coroot_fund(const RootDatum& rd, const IVec& b) {
  IVec g(rd.rank, 0);
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) g[i] += rd.cartan[i][j] * b[j];
  return g;
}

void require_dominant_lattice(const RootDatum& rd, const IVec& lam) {
  if (!is_dominant(lam))
    throw std::invalid_argument("highest coweight must be dominant");
  if (!in_coroot_lattice(rd, lam))
    throw std::invalid_argument("highest coweight must lie in the coroot lattice");
}

}  // namespace

std::vector<IVec> dominant_weights_below(const RootDatum& rd, const IVec& lam_fund) {
  require_dominant_lattice(rd, lam_fund);
  // Downward closure: every dominant mu < lambda admits a dominant nu with
  // mu < nu <= lambda and nu - mu a positive coroot (covers of the dominance
  // order on dominant weights differ by positive roots of the ambient
  // system), so repeatedly subtracting positive coroots while keeping
  // dominance reaches the whole set.
  std::vector<IMat::value_type> steps;
  for (const auto& b : rd.positive_coroots) steps.push_back(coroot_fund(rd, b));
  std::set<IVec> seen{lam_fund};
  std::vector<IVec> queue{lam_fund};
  while (!queue.empty()) {
    IVec f = queue.back();
    queue.pop_back();
    for (const auto& g : steps) {
      IVec h(rd.rank);
      bool dom = true;
      for (int i = 0; i < rd.rank; ++i) {
        h[i] = f[i] - g[i];
        dom = dom && h[i] >= 0;
      }
      if (dom && seen.insert(h).second) queue.push_back(h);
    }
  }
  std::vector<IVec> out(seen.begin(), seen.end());
  const long long top = pairing_two_rho(rd, lam_fund);
  std::sort(out.begin(), out.end(), [&](const IVec& a, const IVec& b) {
    const long long da = top - pairing_two_rho(rd, a);
    const long long db = top - pairing_two_rho(rd, b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

const WeightTable& weight_table(const RootDatum& rd, const IVec& lam_fund) {
  static std::mutex mu;
  static std::map<std::pair<LieType, IVec>, WeightTable> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(rd.type, lam_fund);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  WeightTable table;
  table.lam = lam_fund;
  table.dominants = dominant_weights_below(rd, lam_fund);

  // Precompute per-coroot data: coroot coords b, fundamental coords g, and
  // the norm (beta, beta).
  struct CorootData {
    IVec b, g;
    long long norm;
  };
  std::vector<CorootData> pos;
  for (const auto& b : rd.positive_coroots) {
    CorootData cd;
    cd.b = b;
    cd.g = coroot_fund(rd, b);
    cd.norm = sym_pairing(rd, cd.g, b);
    pos.push_back(std::move(cd));
  }

  auto normsq = [&](const IVec& f) {
    // (xi, xi) for xi in the coroot lattice: integral by construction.
    const IVec c = coroot_coords(rd, f);
    return sym_pairing(rd, f, c);
  };
  const long long nlam = normsq(lam_fund);

  // Freudenthal: ((lam+rho, lam+rho) - (mu+rho, mu+rho)) m_mu =
  //   2 sum_{beta > 0} sum_{k >= 1} m_{mu + k beta} (mu + k beta, beta).
  // Processing order: the table is sorted with <mu, 2rho> decreasing, and
  // every referenced weight mu + k beta has strictly larger <., 2rho>, so its
  // dominant representative is already present.
  for (const auto& mu : table.dominants) {
    if (mu == lam_fund) {
      table.mult[mu] = 1;
      continue;
    }
    Int acc = 0;
    for (const auto& cd : pos) {
      const long long mu_beta = sym_pairing(rd, mu, cd.b);
      const long long nmu = normsq(mu);
      for (long long k = 1;; ++k) {
        // (mu + k beta, mu + k beta) grows beyond (lam, lam) => not a weight.
        const long long nnu = nmu + 2 * k * mu_beta + k * k * cd.norm;
        if (nnu > nlam) break;
        IVec nu(rd.rank);
        for (int i = 0; i < rd.rank; ++i) nu[i] = mu[i] + k * cd.g[i];
        const IVec dom = dominant_representative(rd, std::move(nu)).fund;
        auto hit = table.mult.find(dom);
        if (hit == table.mult.end()) continue;
        acc += hit->second * (mu_beta + k * cd.norm);
      }
    }
    // Denominator (lam + mu + 2 rho, lam - mu) > 0 for mu < lam.
    IVec sum(rd.rank);
    for (int i = 0; i < rd.rank; ++i) sum[i] = lam_fund[i] + mu[i] + 2;
    IVec diff(rd.rank);
    for (int i = 0; i < rd.rank; ++i) diff[i] = lam_fund[i] - mu[i];
    const long long den = sym_pairing(rd, sum, coroot_coords(rd, diff));
    if (den <= 0) throw std::logic_error("Freudenthal: nonpositive denominator");
    const Int num = 2 * acc;
    if (num % den != 0) throw std::logic_error("Freudenthal: inexact division");
    table.mult[mu] = num / den;
  }
  return cache.emplace(std::move(key), std::move(table)).first->second;
}

Int weight_multiplicity(const RootDatum& rd, const IVec& lam_fund, const IVec& mu_fund) {
  const WeightTable& t = weight_table(rd, lam_fund);
  const IVec dom = dominant_representative(rd, mu_fund).fund;
  auto it = t.mult.find(dom);
  return it == t.mult.end() ? Int(0) : it->second;
}

Int weyl_dimension(const RootDatum& rd, const IVec& lam_fund) {
  require_dominant_lattice(rd, lam_fund);
  IVec lam_rho(rd.rank);
  for (int i = 0; i < rd.rank; ++i) lam_rho[i] = lam_fund[i] + 1;
  const IVec ones(rd.rank, 1);
  Int num = 1, den = 1;
  for (const auto& b : rd.positive_coroots) {
    num *= sym_pairing(rd, lam_rho, b);
    den *= sym_pairing(rd, ones, b);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension: inexact division");
  return num / den;
}

ZeroWeightDim zero_weight_dim(const RootDatum& rd, const IVec& lam_fund) {
  if (!is_dominant(lam_fund))
    throw std::invalid_argument("highest coweight must be dominant");
  if (!in_coroot_lattice(rd, lam_fund)) return {Int(0), false};
  return {weight_multiplicity(rd, lam_fund, IVec(rd.rank, 0)), true};
}

Int weyl_orbit_size(const RootDatum& rd, const IVec& mu_fund) {
  std::set<IVec> seen{mu_fund};
  std::vector<IVec> queue{mu_fund};
  while (!queue.empty()) {
    IVec f = queue.back();
    queue.pop_back();
    for (int j = 0; j < rd.rank; ++j) {
      if (f[j] == 0) continue;
      IVec g = f;
      const long long fj = f[j];
      for (int k = 0; k < rd.rank; ++k) g[k] -= fj * rd.cartan[k][j];
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  return Int(seen.size());
}

}  // namespace reederkit
