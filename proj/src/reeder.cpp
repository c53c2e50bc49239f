// SPDX-License-Identifier: MIT
#include "reederkit/reeder.hpp"

#include "reederkit/multiplicity.hpp"
#include "reederkit/paperdata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace reederkit {
namespace {

IVec coroot_to_fund(const RootDatum& rd, const IVec& b) {
  IVec f(rd.rank, 0);
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) f[i] += rd.cartan[i][j] * b[j];
  return f;
}

/// 2 * (dominant short coroot of maximal height), fundamental coordinates.
IVec two_alpha0_fund(const RootDatum& rd) {
  IVec f = coroot_to_fund(rd, rd.highest_short_coroot);
  for (long long& x : f) x *= 2;
  return f;
}

void push_parts(IVec& parts, long long value, long long count) {
  if (count < 0)
    throw std::logic_error("piece partition with negative multiplicity");
  for (long long i = 0; i < count; ++i) parts.push_back(value);
}

OrbitLabel parts_orbit(const LieType& t, IVec parts, VeryEvenTag tag = VeryEvenTag::None) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return make_classical_orbit(t, std::move(parts), tag);
}

ReederPiece classical_piece(const LieType& t, const IVec& fund) {
  const RootDatum& rd = build_root_system(t);
  if (!is_small(rd, fund))
    throw std::invalid_argument("reeder_piece: " + coweight_display(rd, fund) +
                                " is not a small dominant coweight of " + to_string(t));
  const IVec a =
      convert_basis(rd, make_coweight(t, Basis::Fundamental, fund), Basis::Classical).coords;
  ReederPiece piece;
  piece.lam = fund;
  piece.self_dual = minus_w0(rd, fund) == fund;
  const long long n = t.rank;
  const long long ones = std::count(a.begin(), a.end(), 1);
  const long long twos = std::count(a.begin(), a.end(), 2);

  switch (t.family) {
    case Family::A: {
      IVec parts;
      if (a.back() >= -1) {
        for (long long x : a) parts.push_back(x + 1);
      } else {
        for (auto it = a.rbegin(); it != a.rend(); ++it) parts.push_back(1 - *it);
      }
      piece.orbits.push_back(parts_orbit(t, std::move(parts)));
      return piece;
    }

    case Family::C: {
      // (1^j 0^(n-j)) -> [2^j 1^(2n-2j)]
      IVec parts;
      push_parts(parts, 2, ones);
      push_parts(parts, 1, 2 * n - 2 * ones);
      piece.orbits.push_back(parts_orbit(t, std::move(parts)));
      return piece;
    }

    case Family::B: {
      if (twos == 0) {
        // (1^(2j) 0^...) -> [2^(2j) 1^(2n-4j+1)]
        IVec parts;
        push_parts(parts, 2, ones);
        push_parts(parts, 1, 2 * n - 2 * ones + 1);
        piece.orbits.push_back(parts_orbit(t, std::move(parts)));
        return piece;
      }
      if (ones == 0) {
        // (2, 0^(n-1)) -> [3 1^(2n-2)]
        IVec parts{3};
        push_parts(parts, 1, 2 * n - 2);
        piece.orbits.push_back(parts_orbit(t, std::move(parts)));
        return piece;
      }
      // (2, 1^(2j), 0^...) -> open [3^2 2^(2j-2) 1^(2n-4j-1)],
      //                       closed [3 2^(2j) 1^(2n-4j-2)]
      IVec open{3, 3};
      push_parts(open, 2, ones - 2);
      push_parts(open, 1, 2 * n - 2 * ones - 1);
      IVec closed{3};
      push_parts(closed, 2, ones);
      push_parts(closed, 1, 2 * n - 2 * ones - 2);
      piece.orbits.push_back(parts_orbit(t, std::move(open)));
      piece.orbits.push_back(parts_orbit(t, std::move(closed)));
      return piece;
    }

    case Family::D: {
      if (n < 4)
        throw std::invalid_argument(
            "piece decompositions in type D start at rank 4 (D3 degenerates to A3)");
      const bool neg = a.back() == -1;
      if (twos == 0) {
        const long long k = ones + (neg ? 1 : 0);
        if (k == n) {
          // (1^n) and (1^(n-1), -1), n even: the two very even orbits [2^n]
          IVec parts;
          push_parts(parts, 2, n);
          piece.orbits.push_back(
              parts_orbit(t, std::move(parts), neg ? VeryEvenTag::II : VeryEvenTag::I));
        } else {
          // (1^(2j) 0^...) -> [2^(2j) 1^(2n-4j)]
          IVec parts;
          push_parts(parts, 2, ones);
          push_parts(parts, 1, 2 * n - 2 * ones);
          piece.orbits.push_back(parts_orbit(t, std::move(parts)));
        }
        return piece;
      }
      if (ones == 0 && !neg) {
        // (2, 0^(n-1)) -> [3 1^(2n-3)]
        IVec parts{3};
        push_parts(parts, 1, 2 * n - 3);
        piece.orbits.push_back(parts_orbit(t, std::move(parts)));
        return piece;
      }
      // (2, 1^(2j), 0^...) and, for odd n, the pair (2, 1^(n-1)) /
      // (2, 1^(n-2), -1): open [3^2 2^(2j-2) 1^(2n-4j-2)]; the closed orbit
      // [3 2^(2j) 1^(2n-4j-3)] exists only when a zero coordinate remains.
      const long long k = ones + (neg ? 1 : 0);
      IVec open{3, 3};
      push_parts(open, 2, k - 2);
      push_parts(open, 1, 2 * n - 2 * k - 2);
      piece.orbits.push_back(parts_orbit(t, std::move(open)));
      if (2 * n - 2 * k - 3 >= 0) {
        IVec closed{3};
        push_parts(closed, 2, k);
        push_parts(closed, 1, 2 * n - 2 * k - 3);
        piece.orbits.push_back(parts_orbit(t, std::move(closed)));
      }
      return piece;
    }

    default:
      throw std::logic_error("classical_piece called for an exceptional type");
  }
}

// -- Partner embeddings -------------------------------------------------------

/// Columns of the embedding: G-coroot coordinates of the images of the
/// partner's simple coroots (types E).  Built once and checked for Cartan
/// compatibility.
const std::vector<IVec>& partner_embedding_columns(const LieType& g) {
  static std::map<LieType, std::vector<IVec>> cache;
  static std::mutex mutex;
  const std::lock_guard<std::mutex> lock(mutex);
  if (const auto it = cache.find(g); it != cache.end()) return it->second;

  const RootDatum& rdg = build_root_system(g);
  // Bourbaki indices in G of the partner's simple roots, 0 = the affine node
  // (mapped to minus the highest coroot).
  std::vector<int> nodes;
  if (g == LieType{Family::E, 6})
    nodes = {1, 3, 4, 5, 6};
  else if (g == LieType{Family::E, 7})
    nodes = {0, 1, 3, 4, 2, 5};
  else if (g == LieType{Family::E, 8})
    nodes = {0, 8, 7, 6, 5, 4, 3, 2};
  else
    throw std::invalid_argument("no classical partner embedding for " + to_string(g));

  std::vector<IVec> cols;
  for (int node : nodes) {
    if (node == 0) {
      IVec c = rdg.highest_short_coroot;  // = the highest coroot (simply laced)
      for (long long& x : c) x = -x;
      cols.push_back(std::move(c));
    } else {
      IVec c(rdg.rank, 0);
      c[node - 1] = 1;
      cols.push_back(std::move(c));
    }
  }

  const RootDatum& rdh = build_root_system(restriction_partner(g));
  for (int i = 0; i < rdh.rank; ++i)
    for (int j = 0; j < rdh.rank; ++j) {
      // In the simply laced G all coroots have squared length 2, so
      // <beta_i, image(betacheck_j)> equals the invariant pairing of images.
      const long long pair = sym_pairing(rdg, coroot_to_fund(rdg, cols[i]), cols[j]);
      if (pair != rdh.cartan[i][j])
        throw std::logic_error("partner embedding of " + to_string(g) +
                               " is not Cartan-compatible");
    }
  return cache.emplace(g, std::move(cols)).first->second;
}

/// For the folded pairs F4 < E6 and G2 < D4: the map from partner nodes to
/// G nodes.  The partner's diagram-automorphism orbits correspond to G nodes;
/// the unique Cartan-compatible assignment is found by search.
const std::vector<int>& fold_node_map(const LieType& g) {
  static std::map<LieType, std::vector<int>> cache;
  static std::mutex mutex;
  const std::lock_guard<std::mutex> lock(mutex);
  if (const auto it = cache.find(g); it != cache.end()) return it->second;

  if (g.family != Family::F && g.family != Family::G)
    throw std::invalid_argument("no folding partner for " + to_string(g));
  const RootDatum& rdg = build_root_system(g);
  const RootDatum& rdh = build_root_system(restriction_partner(g));
  const int hn = rdh.rank;

  // Diagram automorphisms of the partner = node permutations preserving its
  // Cartan matrix; their orbits are the folding classes.
  std::vector<int> perm(hn);
  for (int i = 0; i < hn; ++i) perm[i] = i;
  std::vector<int> cls(hn);
  for (int i = 0; i < hn; ++i) cls[i] = i;
  const std::function<int(int)> find_cls = [&](int x) {
    while (cls[x] != x) x = cls[x] = cls[cls[x]];
    return x;
  };
  std::vector<int> p = perm;
  do {
    bool ok = true;
    for (int i = 0; ok && i < hn; ++i)
      for (int j = 0; ok && j < hn; ++j)
        if (rdh.cartan[p[i]][p[j]] != rdh.cartan[i][j]) ok = false;
    if (ok)
      for (int i = 0; i < hn; ++i) cls[std::max(find_cls(i), find_cls(p[i]))] =
          std::min(find_cls(i), find_cls(p[i]));
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<int, std::vector<int>> orbit_of;
  for (int i = 0; i < hn; ++i) orbit_of[find_cls(i)].push_back(i);
  std::vector<std::vector<int>> orbits;
  for (auto& entry : orbit_of) orbits.push_back(std::move(entry.second));
  if (static_cast<int>(orbits.size()) != rdg.rank)
    throw std::logic_error("folding orbit count does not match the rank of " + to_string(g));

  // Search for the unique assignment orbit -> G node compatible with both
  // Cartan matrices: sum_{b in orbit(j)} C_H[a][b] == C_G[node(a)][j].
  std::vector<int> assign(rdg.rank);
  for (int i = 0; i < rdg.rank; ++i) assign[i] = i;  // assign[g_node] = orbit
  std::vector<int> solution;
  do {
    std::vector<int> node_of(hn, -1);
    for (int j = 0; j < rdg.rank; ++j)
      for (int b : orbits[assign[j]]) node_of[b] = j;
    bool ok = true;
    for (int a = 0; ok && a < hn; ++a)
      for (int j = 0; ok && j < rdg.rank; ++j) {
        long long sum = 0;
        for (int b : orbits[assign[j]]) sum += rdh.cartan[a][b];
        if (sum != rdg.cartan[node_of[a]][j]) ok = false;
      }
    if (ok) {
      if (!solution.empty())
        throw std::logic_error("folding assignment for " + to_string(g) + " is not unique");
      solution = node_of;
    }
  } while (std::next_permutation(assign.begin(), assign.end()));
  if (solution.empty())
    throw std::logic_error("no Cartan-compatible folding assignment for " + to_string(g));
  return cache.emplace(g, std::move(solution)).first->second;
}

const std::map<IVec, ReederPiece>& exceptional_pieces(const LieType& g);

ReederPiece saturate_piece(const LieType& g, const IVec& lam_fund,
                           const std::vector<OrbitLabel>& partner_orbits) {
  const RootDatum& rd = build_root_system(g);
  ReederPiece piece;
  piece.lam = lam_fund;
  piece.self_dual = minus_w0(rd, lam_fund) == lam_fund;
  std::vector<std::pair<long long, OrbitLabel>> found;
  for (const OrbitLabel& o : partner_orbits) {
    const SaturationRecord* rec = find_saturation(g, o);
    if (!rec)
      throw std::logic_error("no saturation record for " + to_string(o.type) + " orbit " +
                             orbit_display(o) + " in " + to_string(g));
    const std::pair<long long, OrbitLabel> entry{rec->g_dim, rec->g_orbit};
    if (std::find(found.begin(), found.end(), entry) == found.end()) found.push_back(entry);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  if (found.empty() || found.size() > 2)
    throw std::logic_error("piece at " + coweight_display(rd, lam_fund) + " of " + to_string(g) +
                           " meets " + std::to_string(found.size()) + " orbits");
  for (auto& entry : found) piece.orbits.push_back(std::move(entry.second));
  return piece;
}

std::map<IVec, ReederPiece> build_exceptional_pieces(const LieType& g) {
  const LieType h = restriction_partner(g);
  std::map<IVec, ReederPiece> out;
  if (g.family == Family::E) {
    const SmallRestriction R = restrict_small(g);
    for (const auto& [lam, mus] : R.cells) {
      std::vector<OrbitLabel> partner_orbits;
      for (const IVec& mu : mus) {
        const ReederPiece p = classical_piece(h, mu);
        partner_orbits.insert(partner_orbits.end(), p.orbits.begin(), p.orbits.end());
      }
      out.emplace(lam, saturate_piece(g, lam, partner_orbits));
    }
  } else {
    for (const IVec& lam : enumerate_small(g)) {
      const IVec mu = unfold_coweight(g, lam);
      const ReederPiece p = is_classical(h)
                                ? classical_piece(h, mu)
                                : exceptional_pieces(h).at(mu);  // F4 goes through E6
      out.emplace(lam, saturate_piece(g, lam, p.orbits));
    }
  }
  // Every small coweight must carry a piece; a gap means the embedding or the
  // bundled tables are inconsistent.
  for (const IVec& lam : enumerate_small(g))
    if (!out.count(lam))
      throw std::logic_error("no piece computed at " +
                             coweight_display(build_root_system(g), lam) + " of " + to_string(g));
  return out;
}

const std::map<IVec, ReederPiece>& exceptional_pieces(const LieType& g) {
  static std::map<LieType, std::map<IVec, ReederPiece>> cache;
  static std::recursive_mutex mutex;  // F4 recurses through the E6 pieces
  const std::lock_guard<std::recursive_mutex> lock(mutex);
  if (const auto it = cache.find(g); it != cache.end()) return it->second;
  return cache.emplace(g, build_exceptional_pieces(g)).first->second;
}

}  // namespace

bool is_small(const RootDatum& rd, const IVec& fund) {
  return is_dominant(fund) && in_coroot_lattice(rd, fund) &&
         !dominance_leq(rd, two_alpha0_fund(rd), fund);
}

std::vector<IVec> enumerate_small(const LieType& t, int max_rank) {
  validate(t);
  if (t.rank > max_rank)
    throw std::invalid_argument("enumerate_small: rank " + std::to_string(t.rank) +
                                " exceeds the bound " + std::to_string(max_rank));
  const RootDatum& rd = build_root_system(t);
  const IVec bound = two_alpha0_fund(rd);
  std::vector<IVec> steps;
  for (const IVec& b : rd.positive_coroots) steps.push_back(coroot_to_fund(rd, b));

  // Upward closure walk over the lower ideal of small dominant coweights:
  // every cover in the dominance order on dominant coweights adds a positive
  // coroot, so starting from zero reaches the whole ideal.
  std::set<IVec> seen;
  std::vector<IVec> todo;
  const IVec zero(rd.rank, 0);
  seen.insert(zero);
  todo.push_back(zero);
  while (!todo.empty()) {
    const IVec cur = todo.back();
    todo.pop_back();
    for (const IVec& step : steps) {
      IVec cand = cur;
      for (int i = 0; i < rd.rank; ++i) cand[i] += step[i];
      if (!is_dominant(cand) || dominance_leq(rd, bound, cand)) continue;
      if (seen.insert(cand).second) todo.push_back(cand);
    }
  }
  return {seen.begin(), seen.end()};
}

long long small_count_closed_form(const LieType& t) {
  validate(t);
  switch (t.family) {
    case Family::A: {
      const long long parts = static_cast<long long>(partitions_of(t.rank + 1).size());
      return 2 * parts - (t.rank + 1) / 2 - 1;
    }
    case Family::B:
    case Family::C:
      return t.rank + 1;
    case Family::D:
      if (t.rank < 4)
        throw std::invalid_argument(
            "the type D small count formula starts at rank 4 (D3 degenerates to A3)");
      return t.rank + 2;
    default:
      throw std::invalid_argument("closed-form small counts cover the classical types only");
  }
}

SmallPoset small_poset(const LieType& t, int max_rank) {
  SmallPoset P;
  P.t = t;
  const RootDatum& rd = build_root_system(t);
  P.nodes = enumerate_small(t, max_rank);
  std::sort(P.nodes.begin(), P.nodes.end(), [&](const IVec& x, const IVec& y) {
    const long long dx = pairing_two_rho(rd, x);
    const long long dy = pairing_two_rho(rd, y);
    if (dx != dy) return dx > dy;
    return x < y;
  });
  const int n = static_cast<int>(P.nodes.size());
  for (const IVec& node : P.nodes) P.dims.push_back(pairing_two_rho(rd, node));

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = dominance_leq(rd, P.nodes[i], P.nodes[j]);
  for (int u = 0; u < n; ++u)
    for (int l = 0; l < n; ++l) {
      if (u == l || !leq[l][u]) continue;
      bool cover = true;
      for (int k = 0; cover && k < n; ++k)
        if (k != u && k != l && leq[l][k] && leq[k][u]) cover = false;
      if (cover) P.covers.emplace_back(u, l);
    }

  std::map<IVec, int> index;
  for (int i = 0; i < n; ++i) index[P.nodes[i]] = i;
  for (int i = 0; i < n; ++i) {
    const auto it = index.find(minus_w0(rd, P.nodes[i]));
    if (it == index.end())
      throw std::logic_error("small coweights of " + to_string(t) + " are not -w0 stable");
    P.dual.push_back(it->second);
  }
  return P;
}

ReederPiece reeder_piece(const LieType& t, const IVec& lam_fund) {
  validate(t);
  if (is_classical(t)) return classical_piece(t, lam_fund);
  const auto& pieces = exceptional_pieces(t);
  const auto it = pieces.find(lam_fund);
  if (it == pieces.end())
    throw std::invalid_argument("reeder_piece: " +
                                coweight_display(build_root_system(t), lam_fund) +
                                " is not a small dominant coweight of " + to_string(t));
  return it->second;
}

LieType restriction_partner(const LieType& g) {
  validate(g);
  if (g == LieType{Family::E, 6}) return {Family::A, 5};
  if (g == LieType{Family::E, 7}) return {Family::D, 6};
  if (g == LieType{Family::E, 8}) return {Family::D, 8};
  if (g == LieType{Family::F, 4}) return {Family::E, 6};
  if (g == LieType{Family::G, 2}) return {Family::D, 4};
  throw std::invalid_argument("no bundled restriction partner for " + to_string(g));
}

IVec embed_partner_coweight(const LieType& g, const IVec& h_fund) {
  if (g.family != Family::E)
    throw std::invalid_argument("classical partner embeddings exist for types E only");
  const RootDatum& rdg = build_root_system(g);
  const RootDatum& rdh = build_root_system(restriction_partner(g));
  const IVec b = coroot_coords(rdh, h_fund);
  const std::vector<IVec>& cols = partner_embedding_columns(g);
  IVec image(rdg.rank, 0);
  for (int i = 0; i < rdh.rank; ++i)
    for (int j = 0; j < rdg.rank; ++j) image[j] += b[i] * cols[i][j];
  return coroot_to_fund(rdg, image);
}

IVec unfold_coweight(const LieType& g, const IVec& g_fund) {
  const std::vector<int>& node_of = fold_node_map(g);
  if (g_fund.size() != static_cast<std::size_t>(build_root_system(g).rank))
    throw std::invalid_argument("unfold_coweight: wrong coordinate count");
  IVec h_fund(node_of.size(), 0);
  for (std::size_t i = 0; i < node_of.size(); ++i) h_fund[i] = g_fund[node_of[i]];
  return h_fund;
}

SmallRestriction restrict_small(const LieType& g) {
  if (g.family != Family::E)
    throw std::invalid_argument("restrict_small applies to types E only");
  const RootDatum& rdg = build_root_system(g);
  const LieType h = restriction_partner(g);
  SmallRestriction R;
  for (const IVec& mu : enumerate_small(h)) {
    const IVec dom = dominant_representative(rdg, embed_partner_coweight(g, mu)).fund;
    if (is_small(rdg, dom))
      R.cells[dom].push_back(mu);
    else
      R.outside.push_back(mu);
  }
  for (auto& cell : R.cells) std::sort(cell.second.begin(), cell.second.end());
  std::sort(R.outside.begin(), R.outside.end());
  return R;
}

std::map<OrbitLabel, Int> stalk_fixed_point_counts(const LieType& g, const IVec& top_lam) {
  if (g.family != Family::E)
    throw std::invalid_argument("fixed-point counts apply to types E only");
  const RootDatum& rdg = build_root_system(g);
  const LieType h = restriction_partner(g);
  std::map<OrbitLabel, Int> rhs;
  for (const IVec& mu : enumerate_small(h)) {
    const ReederPiece p = classical_piece(h, mu);
    const Int m = weight_multiplicity(rdg, top_lam, embed_partner_coweight(g, mu));
    for (std::size_t k = 0; k < p.orbits.size(); ++k) {
      const int pts = (p.orbits.size() == 2 && k == 0) ? 2 : 1;
      rhs[p.orbits[k]] += pts * m;
    }
  }
  return rhs;
}

}  // namespace reederkit
