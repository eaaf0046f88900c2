// Command-line front end.  Exit codes: 0 success / all checks pass,
// 1 input error or failed verification, 2 enumeration budget exceeded.
#include <CLI11.hpp>

#include <hexinv/cocycles.hpp>
#include <hexinv/cohomology.hpp>
#include <hexinv/hexagon.hpp>
#include <hexinv/invariants.hpp>
#include <hexinv/pachner.hpp>
#include <hexinv/triangulation.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace hexinv;

namespace {

struct FieldArg {
  int p = 2;
  int k = 1;
};

FieldArg parse_field(const std::string& text) {
  FieldArg fa;
  std::size_t comma = text.find(',');
  try {
    fa.p = std::stoi(text.substr(0, comma));
    fa.k = comma == std::string::npos ? 1 : std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--field", "expected p,k (e.g. 2,4)");
  }
  return fa;
}

Triangulation parse_primitive(const std::string& tok) {
  if (tok == "boundary-simplex") return boundary_of_simplex(5);
  if (tok == "sphere2") return sphere(2);
  if (tok == "sphere3") return sphere(3);
  if (tok == "rp2") return projective_plane();
  if (tok.rfind("circle", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(tok.substr(6));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad circle size in '" + tok + "'");
    }
    return circle(n);
  }
  throw std::invalid_argument(
      "unknown generator '" + tok +
      "' (expected boundary-simplex, circle<n>, sphere2, sphere3, rp2, product ...)");
}

Triangulation parse_generator(const std::vector<std::string>& toks) {
  if (toks.empty()) throw std::invalid_argument("empty generator expression");
  if (toks[0] != "product" && toks.size() != 1)
    throw std::invalid_argument("unexpected token '" + toks[1] + "'");
  if (toks[0] == "product" && toks.size() < 3)
    throw std::invalid_argument("product needs at least two factors");
  Triangulation t = parse_primitive(toks[toks.size() == 1 ? 0 : 1]);
  for (std::size_t i = 2; i < toks.size(); ++i)
    t = staircase_product(t, parse_primitive(toks[i]));
  std::string name = toks[0];
  for (std::size_t i = 1; i < toks.size(); ++i) name += " " + toks[i];
  t.set_name(name);
  return t;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  return toks;
}

// Shared --tri/--gen source handling.
struct Source {
  std::string tri_path;
  std::string gen_expr;

  void attach(CLI::App* cmd) {
    auto* tri = cmd->add_option("--tri", tri_path, "triangulation file");
    auto* gen = cmd->add_option("--gen", gen_expr,
                                "generator expression, e.g. 'product circle3 circle3'");
    tri->excludes(gen);
  }

  Triangulation load() const {
    if (!tri_path.empty()) {
      Triangulation t = ingest_tri_file(tri_path);
      if (!t.name())
        t.set_name(std::filesystem::path(tri_path).stem().string());
      return t;
    }
    if (!gen_expr.empty()) return parse_generator(split_ws(gen_expr));
    throw std::invalid_argument("no triangulation: pass --tri or --gen");
  }
};

bool json_mode(const std::string& format) {
  if (format == "json") return true;
  if (format == "text") return false;
  throw std::invalid_argument("unknown format '" + format + "'");
}

std::string check_json(const std::string& target, const CheckReport& rep) {
  std::string out = "{\"target\":\"" + target + "\",\"checks\":[";
  for (std::size_t i = 0; i < rep.lines.size(); ++i) {
    if (i) out += ",";
    out += "{\"label\":\"" + rep.lines[i].label + "\",\"pass\":";
    out += rep.lines[i].pass ? "true}" : "false}";
  }
  out += "],\"pass\":";
  out += rep.pass() ? "true}" : "false}";
  return out;
}

void emit_check(const std::string& target, const CheckReport& rep, bool json) {
  if (json)
    std::cout << check_json(target, rep) << "\n";
  else
    std::cout << rep.to_text();
}

CheckReport hexagon_checks(const std::vector<FieldArg>& fields, bool verbose) {
  CheckReport rep;
  for (const FieldArg& fa : fields) {
    HexagonReport hr = verify_full_hexagon(Gf::make(fa.p, fa.k));
    if (verbose) std::cout << hr.to_text();
    rep.lines.push_back({"GF(" + std::to_string(fa.p) +
                             (fa.k > 1 ? "^" + std::to_string(fa.k) : "") +
                             "): all boundary splits and multiplicities",
                         hr.pass});
  }
  return rep;
}

CheckReport appendix_checks(std::uint64_t seed) {
  CheckReport rep;
  for (int p : {7, 11}) {
    GfPtr f = Gf::make(p, 1);
    std::mt19937_64 gen(seed);
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
      fe m = fe(1 + gen() % std::uint64_t(p - 1));
      ok = ok && verify_edge_dependencies(f, m).pass();
    }
    rep.lines.push_back(
        {"GF(" + std::to_string(p) + "): dependency rows vanish, 20 random parameters",
         ok});
  }
  for (int p : {2, 3, 5, 7, 11}) {
    GfPtr f = Gf::make(p, 1);
    fe minus1 = f->neg(1);
    bool ok = deformed_r_matrix(f, minus1) == r_matrix(f);
    EdgeProfile a = deformed_edge_profile(f, minus1), b = edge_profile(f);
    ok = ok && a.x == b.x && a.y == b.y;
    rep.lines.push_back(
        {"GF(" + std::to_string(p) + "): parameter -1 reproduces the fixed data", ok});
  }
  return rep;
}

CheckReport pachner_checks(std::uint64_t budget) {
  CheckReport rep;
  const Cochain& c = catalogue(2, 3)[0].cochain;
  GfPtr f4 = Gf::make(2, 2);
  for (const char* expr : {"boundary-simplex", "product circle3 circle3 circle3 circle3"}) {
    Triangulation t = parse_generator(split_ws(expr));
    long long rough0 = rough_invariant(t, 2);
    InvariantReport base = refined_invariant(t, f4, c, "p2k3c1", budget);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      FuzzResult fr = fuzz(t, 20, seed);
      bool ok = !fr.exhausted && rough_invariant(fr.result, 2) == rough0;
      InvariantReport moved = refined_invariant(fr.result, f4, c, "p2k3c1", budget);
      ok = ok && moved.refined->histogram == base.refined->histogram;
      rep.lines.push_back({std::string(*t.name()) + ", seed " + std::to_string(seed) +
                               ": invariants preserved after 20 moves",
                           ok});
    }
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hexagon-relation invariants of triangulated closed 4-manifolds"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")->capture_default_str();
  };

  // invariant
  auto* inv = app.add_subcommand("invariant", "rough and refined invariants");
  Source inv_src;
  inv_src.attach(inv);
  std::string inv_field = "2,1";
  std::vector<std::string> inv_cocycles;
  std::uint64_t inv_sample = 0, inv_seed = 1, inv_budget = kDefaultBudget;
  unsigned inv_threads = 0;
  inv->add_option("--field", inv_field, "p,k")->capture_default_str();
  inv->add_option("--cocycle", inv_cocycles, "catalogue name, e.g. p2k3c1; repeatable")
      ->required();
  inv->add_option("--sample", inv_sample, "Monte-Carlo sample count (0 = exact)");
  inv->add_option("--seed", inv_seed, "sampling seed")->capture_default_str();
  inv->add_option("--budget", inv_budget, "max exact cosets")->capture_default_str();
  inv->add_option("--threads", inv_threads, "worker threads (0 = auto)");
  add_format(inv);

  // rough
  auto* rough = app.add_subcommand("rough", "rough invariant only");
  Source rough_src;
  rough_src.attach(rough);
  std::string rough_field = "2,1";
  rough->add_option("--field", rough_field, "p,k (only the characteristic matters)")
      ->capture_default_str();
  add_format(rough);

  // cohomology
  auto* coh = app.add_subcommand("cohomology", "dimension of the degree-kappa cohomology");
  int coh_p = 2, coh_kappa = 2;
  coh->add_option("--p", coh_p, "characteristic")->required();
  coh->add_option("--kappa", coh_kappa, "polynomial degree")->required();
  add_format(coh);

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification bundle");
  std::string ver_target;
  ver->add_option("target", ver_target, "hexagon | cocycles | appendix | pachner")
      ->required();
  std::string ver_field;
  std::uint64_t ver_seed = 1, ver_budget = std::uint64_t(1) << 26;
  ver->add_option("--field", ver_field, "restrict hexagon check to one field");
  ver->add_option("--seed", ver_seed, "seed for randomized checks")->capture_default_str();
  ver->add_option("--budget", ver_budget, "max exact cosets")->capture_default_str();
  add_format(ver);

  // generate
  auto* gen = app.add_subcommand("generate", "print a triangulation file");
  std::vector<std::string> gen_tokens;
  gen->add_option("expr", gen_tokens, "generator expression tokens")->required();

  // pachner-fuzz
  auto* pf = app.add_subcommand("pachner-fuzz", "random move chain; invariants must not move");
  Source pf_src;
  pf_src.attach(pf);
  std::string pf_field = "2,2";
  std::string pf_cocycle;
  std::uint64_t pf_moves = 20, pf_seed = 1, pf_cap = 0, pf_budget = std::uint64_t(1) << 26;
  pf->add_option("--field", pf_field, "p,k")->capture_default_str();
  pf->add_option("--cocycle", pf_cocycle, "also compare this refined histogram");
  pf->add_option("--moves", pf_moves, "move count")->capture_default_str();
  pf->add_option("--seed", pf_seed, "chain seed")->capture_default_str();
  pf->add_option("--cell-cap", pf_cap, "abort growth beyond this many cells (0 = none)");
  pf->add_option("--budget", pf_budget, "max exact cosets")->capture_default_str();
  add_format(pf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    bool json = json_mode(format);

    if (inv->parsed()) {
      FieldArg fa = parse_field(inv_field);
      GfPtr f = Gf::make(fa.p, fa.k);
      Triangulation t = inv_src.load();
      std::vector<InvariantReport> reps;
      for (const std::string& name : inv_cocycles) {
        Cochain c = catalogue_lookup(name);
        reps.push_back(inv_sample > 0
                           ? sampled_invariant(t, f, c, name, inv_sample, inv_seed)
                           : refined_invariant(t, f, c, name, inv_budget, inv_threads));
      }
      if (json) {
        if (reps.size() == 1) {
          std::cout << reps[0].to_json() << "\n";
        } else {
          std::cout << "[";
          for (std::size_t i = 0; i < reps.size(); ++i)
            std::cout << (i ? "," : "") << reps[i].to_json();
          std::cout << "]\n";
        }
      } else {
        for (std::size_t i = 0; i < reps.size(); ++i)
          std::cout << (i ? "\n" : "") << reps[i].to_text();
      }
      return 0;
    }

    if (rough->parsed()) {
      FieldArg fa = parse_field(rough_field);
      InvariantReport rep = rough_report(rough_src.load(), fa.p);
      std::cout << (json ? rep.to_json() + "\n" : rep.to_text());
      return 0;
    }

    if (coh->parsed()) {
      long long dim = h4(coh_p, coh_kappa).dim;
      bool tabulated = false;
      for (auto [p, kappa] : catalogue_pairs())
        tabulated = tabulated || (p == coh_p && kappa == coh_kappa);
      if (json) {
        std::cout << "{\"p\":" << coh_p << ",\"kappa\":" << coh_kappa
                  << ",\"dim\":" << dim
                  << ",\"catalogue\":" << (tabulated ? "true" : "false") << "}\n";
      } else {
        std::cout << "H4 p=" << coh_p << " kappa=" << coh_kappa << " dim=" << dim
                  << (tabulated ? "" : "  (outside the catalogued range)") << "\n";
      }
      return 0;
    }

    if (ver->parsed()) {
      CheckReport rep;
      if (ver_target == "hexagon") {
        std::vector<FieldArg> fields;
        if (!ver_field.empty())
          fields.push_back(parse_field(ver_field));
        else
          fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
        rep = hexagon_checks(fields, !json);
      } else if (ver_target == "cocycles") {
        rep = verify_catalogue();
        CheckReport bridge = verify_char0_bridge();
        rep.lines.insert(rep.lines.end(), bridge.lines.begin(), bridge.lines.end());
      } else if (ver_target == "appendix") {
        rep = appendix_checks(ver_seed);
      } else if (ver_target == "pachner") {
        rep = pachner_checks(ver_budget);
      } else {
        throw std::invalid_argument("unknown verify target '" + ver_target + "'");
      }
      emit_check(ver_target, rep, json);
      return rep.pass() ? 0 : 1;
    }

    if (gen->parsed()) {
      std::cout << emit_tri(parse_generator(gen_tokens));
      return 0;
    }

    if (pf->parsed()) {
      FieldArg fa = parse_field(pf_field);
      Triangulation t = pf_src.load();
      long long rough0 = rough_invariant(t, fa.p);
      FuzzResult fr = fuzz(t, pf_moves, pf_seed, pf_cap);
      long long rough1 = rough_invariant(fr.result, fa.p);
      bool rough_match = rough0 == rough1;
      bool hist_match = true;
      if (!pf_cocycle.empty()) {
        GfPtr f = Gf::make(fa.p, fa.k);
        Cochain c = catalogue_lookup(pf_cocycle);
        InvariantReport before = refined_invariant(t, f, c, pf_cocycle, pf_budget);
        InvariantReport after = refined_invariant(fr.result, f, c, pf_cocycle, pf_budget);
        hist_match = before.refined->histogram == after.refined->histogram;
      }
      bool pass = rough_match && hist_match;
      if (json) {
        std::cout << "{\"manifold\":\"" << (t.name() ? *t.name() : "?")
                  << "\",\"seed\":" << pf_seed << ",\"moves_requested\":" << pf_moves
                  << ",\"moves_applied\":" << fr.log.size()
                  << ",\"exhausted\":" << (fr.exhausted ? "true" : "false")
                  << ",\"cells_before\":" << t.facets().size()
                  << ",\"cells_after\":" << fr.result.facets().size()
                  << ",\"i_rough_before\":" << rough0
                  << ",\"i_rough_after\":" << rough1
                  << ",\"rough_match\":" << (rough_match ? "true" : "false");
        if (!pf_cocycle.empty())
          std::cout << ",\"cocycle\":\"" << pf_cocycle
                    << "\",\"histogram_match\":" << (hist_match ? "true" : "false");
        std::cout << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
      } else {
        std::cout << "manifold      " << (t.name() ? *t.name() : "?") << "\n"
                  << "moves         " << fr.log.size() << " of " << pf_moves
                  << (fr.exhausted ? " (exhausted)" : "") << "\n"
                  << "cells         " << t.facets().size() << " -> "
                  << fr.result.facets().size() << "\n"
                  << "rough         " << rough0 << " -> " << rough1
                  << (rough_match ? "  ok" : "  MISMATCH") << "\n";
        if (!pf_cocycle.empty())
          std::cout << "histogram     " << (hist_match ? "unchanged  ok" : "MISMATCH")
                    << "\n";
      }
      return pass ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
