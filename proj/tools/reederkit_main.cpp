// SPDX-License-Identifier: MIT
//
// Command-line front end: enumerate small coweights (JSON or DOT Hasse
// diagram), list their nilpotent pieces, compute weight multiplicities, and
// run the verification suites.  JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 verification mismatch or internal failure,
// 2 usage error.
#include "CLI11.hpp"
#include "json.hpp"

#include "reederkit/multiplicity.hpp"
#include "reederkit/reeder.hpp"
#include "reederkit/verify.hpp"

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

namespace {

using nlohmann::json;
using namespace reederkit;

json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();  // arbitrary-precision fallback keeps the output exact
}

json coweight_json(const RootDatum& rd, const IVec& fund) {
  json j;
  j["display"] = coweight_display(rd, fund);
  j["fund"] = fund;
  if (is_classical(rd.type))
    j["classical"] =
        convert_basis(rd, make_coweight(rd.type, Basis::Fundamental, fund), Basis::Classical)
            .coords;
  return j;
}

int cmd_small(const LieType& t, const std::string& format) {
  const RootDatum& rd = build_root_system(t);
  const SmallPoset poset = small_poset(t);
  if (format == "dot") {
    std::printf("digraph small_%s {\n  rankdir=BT;\n  node [shape=box];\n",
                to_string(t).c_str());
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
      const std::string id = coweight_display(rd, poset.nodes[i]);
      const bool self_dual = poset.dual[i] == static_cast<int>(i);
      std::printf("  \"%s\" [label=\"%s\\ndim %lld\"%s];\n", id.c_str(), id.c_str(),
                  poset.dims[i], self_dual ? "" : ", style=dashed");
    }
    for (const auto& [upper, lower] : poset.covers)
      std::printf("  \"%s\" -> \"%s\";\n",
                  coweight_display(rd, poset.nodes[lower]).c_str(),
                  coweight_display(rd, poset.nodes[upper]).c_str());
    std::printf("}\n");
    return 0;
  }
  json out;
  out["schema"] = "reederkit.small.v1";
  out["type"] = to_string(t);
  out["count"] = poset.nodes.size();
  out["nodes"] = json::array();
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    json node = coweight_json(rd, poset.nodes[i]);
    node["dim"] = poset.dims[i];
    node["dual"] = coweight_display(rd, poset.nodes[poset.dual[i]]);
    node["self_dual"] = poset.dual[i] == static_cast<int>(i);
    out["nodes"].push_back(std::move(node));
  }
  out["covers"] = json::array();
  for (const auto& [upper, lower] : poset.covers)
    out["covers"].push_back({coweight_display(rd, poset.nodes[upper]),
                             coweight_display(rd, poset.nodes[lower])});
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_reeder(const LieType& t) {
  const RootDatum& rd = build_root_system(t);
  const SmallPoset poset = small_poset(t);
  json out;
  out["schema"] = "reederkit.reeder.v1";
  out["type"] = to_string(t);
  out["count"] = poset.nodes.size();
  out["pieces"] = json::array();
  for (const IVec& node : poset.nodes) {
    const ReederPiece piece = reeder_piece(t, node);
    json p;
    p["coweight"] = coweight_display(rd, node);
    p["fund"] = node;
    p["dim"] = pairing_two_rho(rd, node);
    p["case"] = piece.orbits.size() == 2 ? "double" : "single";
    p["self_dual"] = piece.self_dual;
    p["orbits"] = json::array();
    for (const OrbitLabel& orbit : piece.orbits)
      p["orbits"].push_back(
          {{"label", orbit_display(orbit)}, {"dim", orbit_dimension(orbit)}});
    out["pieces"].push_back(std::move(p));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_mult(const LieType& t, const std::string& lambda, const std::string& mu) {
  const RootDatum& rd = build_root_system(t);
  const IVec lam = parse_coweight(rd, lambda);
  const IVec mu_fund = parse_coweight(rd, mu);
  if (!is_dominant(lam))
    throw std::invalid_argument("lambda must be dominant: " + lambda);
  json out;
  out["schema"] = "reederkit.mult.v1";
  out["type"] = to_string(t);
  out["lambda"] = coweight_display(rd, lam);
  out["mu"] = coweight_display(rd, mu_fund);
  out["multiplicity"] = int_json(weight_multiplicity(rd, lam, mu_fund));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int jobs) {
  const std::vector<ReportRecord> report = verify_suite(suite, jobs);
  json out;
  out["schema"] = "reederkit.verify.v1";
  out["suite"] = suite;
  out["jobs"] = jobs;
  long long n_ok = 0, n_mismatch = 0, n_error = 0;
  out["records"] = json::array();
  for (const ReportRecord& r : report) {
    (r.status == "ok" ? n_ok : r.status == "mismatch" ? n_mismatch : n_error) += 1;
    out["records"].push_back({{"command", r.command},
                              {"inputs", r.inputs},
                              {"outputs", r.outputs},
                              {"status", r.status},
                              {"origin", r.origin}});
  }
  out["counts"] = {{"ok", n_ok}, {"mismatch", n_mismatch}, {"error", n_error}};
  const bool ok = all_ok(report);
  out["ok"] = ok;
  std::cout << out.dump(2) << "\n";
  if (!ok)
    std::cerr << "verify " << suite << ": " << n_mismatch << " mismatch(es), " << n_error
              << " error(s) in " << report.size() << " checks\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small dominant coweights, their nilpotent pieces, and exact verification"};
  app.require_subcommand(1);

  std::string family, lambda, mu, format = "json", suite = "all";
  int rank = 0, jobs = 1;

  CLI::App* small = app.add_subcommand("small", "Small-coweight poset (JSON or DOT)");
  small->add_option("family", family, "Cartan family A..G")->required();
  small->add_option("rank", rank, "rank")->required();
  small->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  CLI::App* reeder = app.add_subcommand("reeder", "Nilpotent pieces of the small coweights");
  reeder->add_option("family", family, "Cartan family A..G")->required();
  reeder->add_option("rank", rank, "rank")->required();

  CLI::App* mult = app.add_subcommand("mult", "Weight multiplicity of mu in V_lambda");
  mult->add_option("family", family, "Cartan family A..G")->required();
  mult->add_option("rank", rank, "rank")->required();
  mult->add_option("lambda", lambda, "dominant coweight (w2+w7, 3w1, 0, or 2,1,1,0)")
      ->required();
  mult->add_option("mu", mu, "coweight, same syntax")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "all, tables, poset, stalk, or matrix");
  verify->add_option("--jobs", jobs, "shard cases across N workers")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly, bad usage exits 2
  }

  try {
    if (*small) return cmd_small(parse_lie_type(family, rank), format);
    if (*reeder) return cmd_reeder(parse_lie_type(family, rank));
    if (*mult) return cmd_mult(parse_lie_type(family, rank), lambda, mu);
    if (*verify) return cmd_verify(suite, jobs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
