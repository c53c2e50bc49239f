// SPDX-License-Identifier: MIT
#include "reederkit/paperdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reederkit {

namespace detail {
extern const char embedded_tables_text[];
extern const unsigned long embedded_tables_size;
}  // namespace detail

namespace {

[[noreturn]] void fail_at(int line, const std::string& msg) {
  throw std::runtime_error("reederkit tables, line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error("reederkit tables: " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long long to_ll(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail_at(line, "expected an integer, got '" + tok + "'");
  }
}

/// Token stream over one line with positional error messages.
class Toks {
 public:
  Toks(std::vector<std::string> t, int line) : t_(std::move(t)), line_(line) {}
  bool done() const { return i_ >= t_.size(); }
  const std::string& next(const char* what) {
    if (done()) fail_at(line_, std::string("missing ") + what);
    return t_[i_++];
  }
  void expect(const std::string& lit) {
    const std::string& got = next(lit.c_str());
    if (got != lit) fail_at(line_, "expected '" + lit + "', got '" + got + "'");
  }
  long long integer(const char* what) { return to_ll(next(what), line_); }
  void end() {
    if (!done()) fail_at(line_, "trailing tokens starting at '" + t_[i_] + "'");
  }
  int line() const { return line_; }

 private:
  std::vector<std::string> t_;
  std::size_t i_ = 0;
  int line_;
};

LieType parse_type_pair(Toks& toks) {
  const std::string fam = toks.next("type family");
  const long long rank = toks.integer("type rank");
  try {
    return parse_lie_type(fam, static_cast<int>(rank));
  } catch (const std::exception& e) {
    fail_at(toks.line(), e.what());
  }
}

IVec parse_cw(const LieType& t, const std::string& tok, int line) {
  try {
    return parse_coweight(build_root_system(t), tok);
  } catch (const std::exception& e) {
    fail_at(line, "bad coweight '" + tok + "' for " + to_string(t) + ": " + e.what());
  }
}

OrbitLabel parse_orb(const LieType& t, const std::string& tok, int line) {
  try {
    return parse_orbit(t, tok);
  } catch (const std::exception& e) {
    fail_at(line, "bad orbit '" + tok + "' for " + to_string(t) + ": " + e.what());
  }
}

/// 2 * (dominant short coroot of maximal height), fundamental coordinates.
IVec two_alpha0_fund(const RootDatum& rd) {
  IVec out(rd.rank, 0);
  for (int i = 0; i < rd.rank; ++i) {
    long long f = 0;
    for (int j = 0; j < rd.rank; ++j) f += rd.cartan[i][j] * rd.highest_short_coroot[j];
    out[i] = 2 * f;
  }
  return out;
}

/// smallness = dominant, in the coroot lattice, and not above twice the
/// dominant short coroot of maximal height.
void check_small(const LieType& t, const IVec& fund, const std::string& what) {
  const RootDatum& rd = build_root_system(t);
  if (!is_dominant(fund)) fail(what + " " + coweight_display(rd, fund) + " is not dominant");
  if (!in_coroot_lattice(rd, fund))
    fail(what + " " + coweight_display(rd, fund) + " is not in the coroot lattice");
  if (dominance_leq(rd, two_alpha0_fund(rd), fund))
    fail(what + " " + coweight_display(rd, fund) + " of " + to_string(t) + " is not small");
}

struct Parser {
  DataStore store;

  enum class Section { None, Calc, Stalk, Zw, Classpo };
  Section section = Section::None;

  std::optional<CalcTable> calc;
  bool calc_has_h = false;
  std::optional<StalkTable> stalk;
  std::optional<ZwTable> zw;
  std::optional<ClasspoGolden> po;

  void flush_calc() {
    if (!calc) return;
    if (!calc_has_h) fail("calc block for " + to_string(calc->g) + " has no h line");
    if (calc->rows.empty()) fail("calc block for " + to_string(calc->g) + " has no rows");
    const LieType key = calc->g;
    if (!store.calc.emplace(key, std::move(*calc)).second)
      fail("duplicate calc block for " + to_string(key));
    calc.reset();
    calc_has_h = false;
  }
  void flush_stalk() {
    if (!stalk) return;
    const LieType key = stalk->g;
    if (!store.stalk.emplace(key, std::move(*stalk)).second)
      fail("duplicate stalk block for " + to_string(key));
    stalk.reset();
  }
  void flush_zw() {
    if (!zw) return;
    const LieType key = zw->g;
    if (!store.zw.emplace(key, std::move(*zw)).second)
      fail("duplicate zero-weight block for " + to_string(key));
    zw.reset();
  }
  void flush_po() {
    if (!po) return;
    for (const auto& g : store.classpo)
      if (g.t == po->t) fail("duplicate golden poset block for " + to_string(po->t));
    store.classpo.push_back(std::move(*po));
    po.reset();
  }
  void flush_all() {
    flush_calc();
    flush_stalk();
    flush_zw();
    flush_po();
  }

  void line_calc(const std::string& kw, Toks& toks) {
    if (kw == "g") {
      flush_calc();
      calc.emplace();
      calc->g = parse_type_pair(toks);
      return;
    }
    if (!calc) fail_at(toks.line(), "'" + kw + "' before any g line");
    if (kw == "h") {
      calc->h = parse_type_pair(toks);
      calc_has_h = true;
      return;
    }
    if (!calc_has_h) fail_at(toks.line(), "'" + kw + "' before the h line");
    if (kw == "lambda") {
      CalcRow row;
      row.lam_fund = parse_cw(calc->g, toks.next("coweight"), toks.line());
      toks.expect("dim");
      row.dim_gr = toks.integer("dimension");
      calc->rows.push_back(std::move(row));
      return;
    }
    if (kw == "mu") {
      if (calc->rows.empty()) fail_at(toks.line(), "mu line before any lambda line");
      CalcSubRow sub;
      sub.mu_fund = parse_cw(calc->h, toks.next("coweight"), toks.line());
      toks.expect(":");
      for (;;) {
        SaturationRecord rec;
        rec.h_orbit = parse_orb(calc->h, toks.next("orbit"), toks.line());
        toks.expect("->");
        rec.g_orbit = parse_orb(calc->g, toks.next("orbit"), toks.line());
        toks.expect("dim");
        rec.g_dim = toks.integer("dimension");
        sub.records.push_back(std::move(rec));
        if (toks.done()) break;
        toks.expect(";");
      }
      calc->rows.back().mus.push_back(std::move(sub));
      return;
    }
    if (kw == "cover") {
      const IVec hi = parse_cw(calc->g, toks.next("coweight"), toks.line());
      toks.expect(">");
      const IVec lo = parse_cw(calc->g, toks.next("coweight"), toks.line());
      calc->coweight_covers.emplace_back(hi, lo);
      return;
    }
    if (kw == "orbitcover") {
      const std::string hi = toks.next("orbit");
      toks.expect(">");
      const std::string lo = toks.next("orbit");
      calc->orbit_covers.emplace_back(hi, lo);
      return;
    }
    fail_at(toks.line(), "unknown keyword '" + kw + "' in a calc section");
  }

  void line_stalk(const std::string& kw, Toks& toks) {
    if (kw == "g") {
      flush_stalk();
      stalk.emplace();
      stalk->g = parse_type_pair(toks);
      return;
    }
    if (!stalk) fail_at(toks.line(), "'" + kw + "' before any g line");
    if (kw == "vcol") {
      StalkColumn col;
      col.top_lam = parse_cw(stalk->g, toks.next("coweight"), toks.line());
      toks.expect(":");
      for (;;) {
        const IVec cw = parse_cw(stalk->g, toks.next("coweight"), toks.line());
        const long long m = toks.integer("multiplicity");
        col.v_column.emplace_back(cw, Int(m));
        if (toks.done()) break;
        toks.expect(";");
      }
      stalk->columns.push_back(std::move(col));
      return;
    }
    if (kw == "stalk") {
      const std::string label = toks.next("orbit");
      const std::string kind = toks.next("ic|sigma");
      if (kind != "ic" && kind != "sigma")
        fail_at(toks.line(), "expected 'ic' or 'sigma', got '" + kind + "'");
      toks.expect(":");
      StalkPolynomial poly;
      std::string first = toks.next("terms");
      if (first != "-") {
        for (;;) {
          const std::size_t colon = first.find(':');
          if (colon == std::string::npos)
            fail_at(toks.line(), "bad stalk term '" + first + "' (want exp:coef)");
          poly.terms.emplace_back(to_ll(first.substr(0, colon), toks.line()),
                                  to_ll(first.substr(colon + 1), toks.line()));
          if (toks.done()) break;
          first = toks.next("term");
        }
      }
      auto& target = (kind == "ic") ? stalk->ic : stalk->ic_sigma;
      if (kind == "sigma") stalk->has_sigma = true;
      if (!target.emplace(label, std::move(poly)).second)
        fail_at(toks.line(), "duplicate stalk row for '" + label + "' (" + kind + ")");
      return;
    }
    fail_at(toks.line(), "unknown keyword '" + kw + "' in the stalk section");
  }

  void line_zw(const std::string& kw, Toks& toks) {
    if (kw == "g") {
      flush_zw();
      zw.emplace();
      zw->g = parse_type_pair(toks);
      return;
    }
    if (!zw) fail_at(toks.line(), "'" + kw + "' before any g line");
    if (kw == "zw") {
      ZwRow row;
      row.lam_fund = parse_cw(zw->g, toks.next("coweight"), toks.line());
      toks.expect(":");
      while (!toks.done()) {
        const std::string rep = toks.next("representation");
        const std::size_t open = rep.find('{');
        const std::size_t comma = rep.find(',', open == std::string::npos ? 0 : open);
        if (open == std::string::npos || comma == std::string::npos || rep.back() != '}')
          fail_at(toks.line(), "bad representation '" + rep + "' (want name{dim,e})");
        row.reps.emplace_back(rep, to_ll(rep.substr(open + 1, comma - open - 1), toks.line()));
      }
      if (row.reps.empty()) fail_at(toks.line(), "empty zero-weight decomposition");
      zw->rows.push_back(std::move(row));
      return;
    }
    fail_at(toks.line(), "unknown keyword '" + kw + "' in the zero-weight section");
  }

  void line_po(const std::string& kw, Toks& toks) {
    if (kw == "t") {
      flush_po();
      po.emplace();
      po->t = parse_type_pair(toks);
      return;
    }
    if (!po) fail_at(toks.line(), "'" + kw + "' before any t line");
    if (kw == "node") {
      po->nodes.push_back(parse_cw(po->t, toks.next("coweight"), toks.line()));
      return;
    }
    if (kw == "cover") {
      const IVec hi = parse_cw(po->t, toks.next("coweight"), toks.line());
      toks.expect(">");
      const IVec lo = parse_cw(po->t, toks.next("coweight"), toks.line());
      po->covers.emplace_back(hi, lo);
      return;
    }
    if (kw == "orbitcover") {
      const OrbitLabel hi = parse_orb(po->t, toks.next("orbit"), toks.line());
      toks.expect(">");
      const OrbitLabel lo = parse_orb(po->t, toks.next("orbit"), toks.line());
      po->orbit_covers.emplace_back(hi, lo);
      return;
    }
    if (kw == "piece") {
      std::pair<IVec, std::vector<OrbitLabel>> piece;
      piece.first = parse_cw(po->t, toks.next("coweight"), toks.line());
      toks.expect(":");
      piece.second.push_back(parse_orb(po->t, toks.next("orbit"), toks.line()));
      while (!toks.done()) {
        toks.expect(",");
        piece.second.push_back(parse_orb(po->t, toks.next("orbit"), toks.line()));
      }
      po->pieces.push_back(std::move(piece));
      return;
    }
    fail_at(toks.line(), "unknown keyword '" + kw + "' in the golden poset section");
  }

  void parse(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
      ++lineno;
      const std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.resize(hash);
      std::vector<std::string> toks = split_ws(raw);
      if (toks.empty()) continue;
      if (toks.front().front() == '[') {
        if (toks.size() != 1 || toks[0].back() != ']')
          fail_at(lineno, "malformed section header");
        flush_all();
        const std::string name = toks[0].substr(1, toks[0].size() - 2);
        if (name == "E6CALC" || name == "E7CALC" || name == "E8CALC" || name == "FGCALC")
          section = Section::Calc;
        else if (name == "ESTALK")
          section = Section::Stalk;
        else if (name == "EXCZW")
          section = Section::Zw;
        else if (name == "CLASSPO")
          section = Section::Classpo;
        else
          fail_at(lineno, "unknown section [" + name + "]");
        continue;
      }
      const std::string kw = toks.front();
      Toks rest(std::vector<std::string>(toks.begin() + 1, toks.end()), lineno);
      switch (section) {
        case Section::None:
          fail_at(lineno, "record before the first section header");
        case Section::Calc:
          line_calc(kw, rest);
          break;
        case Section::Stalk:
          line_stalk(kw, rest);
          break;
        case Section::Zw:
          line_zw(kw, rest);
          break;
        case Section::Classpo:
          line_po(kw, rest);
          break;
      }
      rest.end();
    }
    flush_all();
  }
};

// -- Load-time validation -----------------------------------------------------

void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

std::string cw_str(const LieType& t, const IVec& fund) {
  return coweight_display(build_root_system(t), fund);
}

void validate_calc(const CalcTable& T) {
  require(is_exceptional(T.g), "calc block for non-exceptional type " + to_string(T.g));
  const LieType expect_h = T.g == LieType{Family::E, 6}   ? LieType{Family::A, 5}
                           : T.g == LieType{Family::E, 7} ? LieType{Family::D, 6}
                           : T.g == LieType{Family::E, 8} ? LieType{Family::D, 8}
                           : T.g == LieType{Family::F, 4} ? LieType{Family::E, 6}
                                                          : LieType{Family::D, 4};
  require(T.h == expect_h, "calc block for " + to_string(T.g) + " pairs with " + to_string(T.h) +
                               ", expected " + to_string(expect_h));
  const RootDatum& rd = build_root_system(T.g);

  std::map<IVec, long long> row_dim;
  for (const CalcRow& row : T.rows) {
    const std::string lam = to_string(T.g) + " coweight " + cw_str(T.g, row.lam_fund);
    check_small(T.g, row.lam_fund, "calc coweight");
    require(row_dim.emplace(row.lam_fund, row.dim_gr).second, "duplicate calc row " + lam);
    require(row.dim_gr == pairing_two_rho(rd, row.lam_fund),
            lam + " lists dim " + std::to_string(row.dim_gr) + " but <lambda,2rho> = " +
                std::to_string(pairing_two_rho(rd, row.lam_fund)));
    require(!row.mus.empty(), lam + " has no mu entries");
  }
  for (const CalcRow& row : T.rows) {
    const IVec dual = minus_w0(rd, row.lam_fund);
    auto it = row_dim.find(dual);
    require(it != row_dim.end() && it->second == row.dim_gr,
            "calc rows of " + to_string(T.g) + " are not closed under -w0 at " +
                cw_str(T.g, row.lam_fund));
  }

  std::map<OrbitLabel, std::pair<OrbitLabel, long long>> saturation;
  std::map<std::string, long long> g_orbit_dim;
  for (const CalcRow& row : T.rows) {
    const std::string lam = to_string(T.g) + " coweight " + cw_str(T.g, row.lam_fund);
    long long max_dim = -1;
    std::set<IVec> seen_mu;
    for (const CalcSubRow& sub : row.mus) {
      check_small(T.h, sub.mu_fund, "restriction coweight");
      require(seen_mu.insert(sub.mu_fund).second,
              lam + " repeats mu " + cw_str(T.h, sub.mu_fund));
      require(!sub.records.empty() && sub.records.size() <= 2,
              lam + ", mu " + cw_str(T.h, sub.mu_fund) + ": want 1 or 2 orbit records");
      require(sub.records.size() == 1 ||
                  sub.records[0].g_dim > sub.records[1].g_dim,
              lam + ", mu " + cw_str(T.h, sub.mu_fund) + ": records must be open first");
      for (const SaturationRecord& rec : sub.records) {
        max_dim = std::max(max_dim, rec.g_dim);
        auto [it, fresh] = saturation.emplace(rec.h_orbit,
                                              std::make_pair(rec.g_orbit, rec.g_dim));
        require(fresh || (it->second.first == rec.g_orbit && it->second.second == rec.g_dim),
                to_string(T.h) + " orbit " + orbit_display(rec.h_orbit) +
                    " saturates inconsistently in " + to_string(T.g));
        auto [jt, fresh2] = g_orbit_dim.emplace(rec.g_orbit.bala_carter, rec.g_dim);
        require(fresh2 || jt->second == rec.g_dim,
                to_string(T.g) + " orbit " + orbit_display(rec.g_orbit) +
                    " listed with two dimensions");
      }
    }
    require(max_dim == row.dim_gr,
            lam + ": largest saturation dim " + std::to_string(max_dim) +
                " differs from the row dimension " + std::to_string(row.dim_gr));
  }

  std::set<std::string> cover_orbits;
  for (const auto& [hi, lo] : T.orbit_covers) {
    require(g_orbit_dim.count(hi) && g_orbit_dim.count(lo),
            to_string(T.g) + " orbit cover " + hi + " > " + lo + " uses unknown labels");
    require(g_orbit_dim[hi] > g_orbit_dim[lo],
            to_string(T.g) + " orbit cover " + hi + " > " + lo + " does not decrease dimension");
    cover_orbits.insert(hi);
    cover_orbits.insert(lo);
  }
  std::set<std::string> rec_orbits;
  for (const auto& entry : g_orbit_dim) rec_orbits.insert(entry.first);
  require(cover_orbits == rec_orbits,
          "orbit covers of " + to_string(T.g) + " do not span exactly the listed orbits");

  std::set<IVec> cover_cws;
  for (const auto& [hi, lo] : T.coweight_covers) {
    require(row_dim.count(hi) && row_dim.count(lo),
            "coweight cover of " + to_string(T.g) + " uses unknown rows");
    require(row_dim[hi] > row_dim[lo],
            "coweight cover " + cw_str(T.g, hi) + " > " + cw_str(T.g, lo) +
                " does not decrease dimension");
    cover_cws.insert(hi);
    cover_cws.insert(lo);
  }
  std::set<IVec> rows_set;
  for (const auto& entry : row_dim) rows_set.insert(entry.first);
  require(cover_cws == rows_set,
          "coweight covers of " + to_string(T.g) + " do not span exactly the listed rows");

  // An exceptional partner's orbits must themselves be rows of its own table;
  // checked by validate_store once all tables are read.
}

std::set<IVec> cover_downset(const std::vector<std::pair<IVec, IVec>>& covers, const IVec& top) {
  std::set<IVec> seen{top};
  std::vector<IVec> todo{top};
  while (!todo.empty()) {
    const IVec cur = todo.back();
    todo.pop_back();
    for (const auto& [hi, lo] : covers)
      if (hi == cur && seen.insert(lo).second) todo.push_back(lo);
  }
  return seen;
}

void validate_stalk(const StalkTable& S, const CalcTable& T) {
  long long max_dim = 0;
  for (const CalcRow& row : T.rows) max_dim = std::max(max_dim, row.dim_gr);
  std::set<IVec> tops_expected;
  std::set<IVec> rows_set;
  for (const CalcRow& row : T.rows) {
    rows_set.insert(row.lam_fund);
    if (row.dim_gr == max_dim) tops_expected.insert(row.lam_fund);
  }
  std::set<IVec> tops_seen;
  for (const StalkColumn& col : S.columns) {
    require(tops_expected.count(col.top_lam),
            "stalk column top " + cw_str(S.g, col.top_lam) + " is not a maximal row");
    require(tops_seen.insert(col.top_lam).second,
            "duplicate stalk column " + cw_str(S.g, col.top_lam));
    require(!col.v_column.empty() && col.v_column.front().first == col.top_lam &&
                col.v_column.front().second == 1,
            "stalk column " + cw_str(S.g, col.top_lam) +
                " must open with the top coweight at multiplicity 1");
    const std::set<IVec> downset = cover_downset(T.coweight_covers, col.top_lam);
    std::set<IVec> listed;
    for (const auto& [cw, m] : col.v_column) {
      require(rows_set.count(cw), "stalk column of " + to_string(S.g) + " lists the unknown row " +
                                      cw_str(S.g, cw));
      require(m > 0, "stalk column multiplicity must be positive");
      require(listed.insert(cw).second, "stalk column repeats " + cw_str(S.g, cw));
    }
    require(listed == downset, "stalk column " + cw_str(S.g, col.top_lam) +
                                   " does not list exactly the coweights below its top");
  }
  require(tops_seen == tops_expected,
          "stalk columns of " + to_string(S.g) + " miss a maximal row");

  std::set<std::string> orbits;
  for (const CalcRow& row : T.rows)
    for (const CalcSubRow& sub : row.mus)
      for (const SaturationRecord& rec : sub.records) orbits.insert(rec.g_orbit.bala_carter);
  std::set<std::string> ic_keys;
  for (const auto& [label, poly] : S.ic) {
    ic_keys.insert(label);
    require(!poly.terms.empty(), "empty plain stalk row for " + label + " in " + to_string(S.g));
  }
  require(ic_keys == orbits,
          "stalk rows of " + to_string(S.g) + " do not match the orbits of its pieces");
  if (S.has_sigma) {
    std::set<std::string> sig_keys;
    for (const auto& entry : S.ic_sigma) sig_keys.insert(entry.first);
    require(sig_keys == orbits, "sigma stalk rows of " + to_string(S.g) +
                                    " do not match the orbits of its pieces");
  } else {
    require(S.ic_sigma.empty(), "sigma rows present but has_sigma is unset");
  }
  for (const auto* table : {&S.ic, &S.ic_sigma})
    for (const auto& [label, poly] : *table)
      for (std::size_t i = 0; i < poly.terms.size(); ++i) {
        require(poly.terms[i].second > 0, "stalk coefficient must be positive in " + label);
        require(i == 0 || poly.terms[i - 1].first > poly.terms[i].first,
                "stalk exponents must strictly decrease in " + label);
      }
}

void validate_store(const DataStore& store) {
  const std::vector<LieType> exc = {{Family::E, 6}, {Family::E, 7}, {Family::E, 8},
                                    {Family::F, 4}, {Family::G, 2}};
  require(store.calc.size() == exc.size(), "expected one calc block per exceptional type");
  for (const LieType& t : exc)
    require(store.calc.count(t), "missing calc block for " + to_string(t));
  for (const auto& entry : store.calc) validate_calc(entry.second);

  // Orbits of an exceptional partner (F4 restricting into E6) must be rows of
  // the partner's own table.
  for (const auto& entry : store.calc) {
    const CalcTable& T = entry.second;
    if (!is_exceptional(T.h)) continue;
    const CalcTable& HT = store.calc.at(T.h);
    std::set<std::string> h_orbits;
    for (const CalcRow& row : HT.rows)
      for (const CalcSubRow& sub : row.mus)
        for (const SaturationRecord& rec : sub.records) h_orbits.insert(rec.g_orbit.bala_carter);
    for (const CalcRow& row : T.rows)
      for (const CalcSubRow& sub : row.mus)
        for (const SaturationRecord& rec : sub.records)
          require(h_orbits.count(rec.h_orbit.bala_carter),
                  to_string(T.h) + " orbit " + orbit_display(rec.h_orbit) +
                      " in the " + to_string(T.g) + " table is not a small-piece orbit of " +
                      to_string(T.h));
  }

  require(store.stalk.size() == 3, "expected stalk blocks for the three E types");
  for (int r : {6, 7, 8})
    require(store.stalk.count({Family::E, r}), "missing stalk block for E" + std::to_string(r));
  for (const auto& [g, S] : store.stalk) validate_stalk(S, store.calc.at(g));
  require(!store.stalk.at({Family::E, 6}).has_sigma, "E6 stalk table must not carry sigma rows");
  require(store.stalk.at({Family::E, 7}).has_sigma && store.stalk.at({Family::E, 8}).has_sigma,
          "E7/E8 stalk tables must carry sigma rows");

  require(store.zw.size() == exc.size(), "expected one zero-weight block per exceptional type");
  for (const LieType& t : exc)
    require(store.zw.count(t), "missing zero-weight block for " + to_string(t));
  for (const auto& [g, Z] : store.zw) {
    std::set<IVec> rows_set;
    for (const CalcRow& row : store.calc.at(g).rows) rows_set.insert(row.lam_fund);
    std::set<IVec> zw_set;
    for (const ZwRow& row : Z.rows) {
      require(zw_set.insert(row.lam_fund).second,
              "duplicate zero-weight row " + cw_str(g, row.lam_fund));
      for (const auto& rep : row.reps)
        require(rep.second > 0,
                "nonpositive dimension in zero-weight row " + cw_str(g, row.lam_fund));
    }
    require(zw_set == rows_set,
            "zero-weight rows of " + to_string(g) + " do not match its calc rows");
  }

  const std::vector<LieType> golden = {{Family::A, 3}, {Family::C, 4}, {Family::B, 4},
                                       {Family::D, 4}};
  require(store.classpo.size() == golden.size(), "expected four golden poset blocks");
  for (const LieType& t : golden) {
    bool found = false;
    for (const auto& g : store.classpo) found = found || g.t == t;
    require(found, "missing golden poset block for " + to_string(t));
  }
  for (const ClasspoGolden& P : store.classpo) {
    const RootDatum& rd = build_root_system(P.t);
    std::set<IVec> nodes;
    for (const IVec& cw : P.nodes) {
      check_small(P.t, cw, "golden poset node");
      require(nodes.insert(cw).second, "duplicate golden poset node " + cw_str(P.t, cw));
    }
    for (const auto& [hi, lo] : P.covers) {
      require(nodes.count(hi) && nodes.count(lo), "golden poset cover uses unknown nodes");
      require(pairing_two_rho(rd, hi) > pairing_two_rho(rd, lo),
              "golden poset cover " + cw_str(P.t, hi) + " > " + cw_str(P.t, lo) +
                  " does not decrease dimension");
    }
    std::set<IVec> piece_cws;
    std::set<OrbitLabel> piece_orbits;
    for (const auto& [cw, orbs] : P.pieces) {
      require(nodes.count(cw), "piece at unknown node " + cw_str(P.t, cw));
      require(piece_cws.insert(cw).second, "duplicate piece at " + cw_str(P.t, cw));
      require(!orbs.empty() && orbs.size() <= 2, "piece must carry 1 or 2 orbits");
      require(orbs.size() == 1 || orbit_dimension(orbs[0]) > orbit_dimension(orbs[1]),
              "double piece at " + cw_str(P.t, cw) + " must list the open orbit first");
      for (const OrbitLabel& o : orbs) piece_orbits.insert(o);
    }
    require(piece_cws == nodes, "pieces of " + to_string(P.t) + " do not cover all nodes");
    std::set<OrbitLabel> cover_orbits;
    for (const auto& [hi, lo] : P.orbit_covers) {
      require(piece_orbits.count(hi) && piece_orbits.count(lo),
              "golden orbit cover of " + to_string(P.t) + " uses unknown orbits");
      require(orbit_dimension(hi) > orbit_dimension(lo),
              "golden orbit cover " + orbit_display(hi) + " > " + orbit_display(lo) +
                  " does not decrease dimension");
      cover_orbits.insert(hi);
      cover_orbits.insert(lo);
    }
    require(cover_orbits == piece_orbits,
            "golden orbit covers of " + to_string(P.t) + " do not span exactly the piece orbits");
  }
}

}  // namespace

DataStore load_tables(const std::string& text) {
  Parser parser;
  parser.parse(text);
  validate_store(parser.store);
  return std::move(parser.store);
}

const DataStore& tables() {
  static const DataStore store = [] {
    std::string text;
    if (const char* path = std::getenv("REEDERKIT_DATA"); path && *path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) fail(std::string("cannot open REEDERKIT_DATA file ") + path);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    } else {
      text.assign(detail::embedded_tables_text, detail::embedded_tables_size);
    }
    return load_tables(text);
  }();
  return store;
}

std::vector<std::pair<std::string, long long>> exceptional_small_orbits(const LieType& g) {
  const auto it = tables().calc.find(g);
  if (it == tables().calc.end())
    throw std::invalid_argument("no small-piece orbit data for " + to_string(g));
  std::map<std::string, long long> dims;
  for (const CalcRow& row : it->second.rows)
    for (const CalcSubRow& sub : row.mus)
      for (const SaturationRecord& rec : sub.records)
        dims.emplace(rec.g_orbit.bala_carter, rec.g_dim);
  std::vector<std::pair<std::string, long long>> out(dims.begin(), dims.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

long long exceptional_orbit_dimension(const LieType& g, const std::string& bala_carter) {
  for (const auto& [label, dim] : exceptional_small_orbits(g))
    if (label == bala_carter) return dim;
  throw std::invalid_argument("unknown " + to_string(g) + " orbit label '" + bala_carter + "'");
}

bool exceptional_closure_leq(const LieType& g, const std::string& a, const std::string& b) {
  const auto it = tables().calc.find(g);
  if (it == tables().calc.end())
    throw std::invalid_argument("no closure data for " + to_string(g));
  std::set<std::string> known;
  for (const auto& [hi, lo] : it->second.orbit_covers) {
    known.insert(hi);
    known.insert(lo);
  }
  if (!known.count(a) || !known.count(b))
    throw std::invalid_argument("orbit label outside the small-piece closure data of " +
                                to_string(g) + ": '" + (known.count(a) ? b : a) + "'");
  if (a == b) return true;
  std::vector<std::string> todo{b};
  std::set<std::string> seen{b};
  while (!todo.empty()) {
    const std::string cur = todo.back();
    todo.pop_back();
    for (const auto& [hi, lo] : it->second.orbit_covers)
      if (hi == cur && seen.insert(lo).second) {
        if (lo == a) return true;
        todo.push_back(lo);
      }
  }
  return false;
}

const SaturationRecord* find_saturation(const LieType& g, const OrbitLabel& h_orbit) {
  const auto it = tables().calc.find(g);
  if (it == tables().calc.end())
    throw std::invalid_argument("no saturation data for " + to_string(g));
  for (const CalcRow& row : it->second.rows)
    for (const CalcSubRow& sub : row.mus)
      for (const SaturationRecord& rec : sub.records)
        if (rec.h_orbit == h_orbit) return &rec;
  return nullptr;
}

Int stalk_value_at_one(const LieType& g, const std::string& orbit, SheafKind kind) {
  const auto it = tables().stalk.find(g);
  if (it == tables().stalk.end())
    throw std::invalid_argument("no stalk data for " + to_string(g));
  const StalkTable& S = it->second;
  if (kind == SheafKind::Sigma && !S.has_sigma)
    throw std::invalid_argument("the stalk table of " + to_string(g) + " has no sigma rows");
  const auto& table = (kind == SheafKind::Plain) ? S.ic : S.ic_sigma;
  const auto row = table.find(orbit);
  if (row == table.end())
    throw std::invalid_argument("no stalk row for " + to_string(g) + " orbit '" + orbit + "'");
  return row->second.value_at_one();
}

}  // namespace reederkit
