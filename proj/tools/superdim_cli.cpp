// superdim: superdimensions of simple gl(m|n)-modules from highest weights.
//
// Commands: analyze, sdim, verify, batch, lemma2.  Weights are written
// "c1,...,cm|d1,...,dn"; the shape is inferred from the token counts.
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 invalid weight, 4 partial batch failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "superdim/charformula.hpp"
#include "superdim/diagram.hpp"
#include "superdim/superdim.hpp"
#include "superdim/verify.hpp"
#include "superdim/weight_syntax.hpp"

namespace {

using nlohmann::json;
using namespace superdim;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWeight = 3;
constexpr int kExitBatch = 4;

json analysis_json(const SuperWeight& w) {
  auto rs = rho_shift(w);
  auto gamma = gamma_set(rs);
  auto diag = build_diagram(rs);
  auto mplus = m_lambda_positive(rs, gamma);
  auto rep = superdimension(w);

  json out;
  out["weight"] = format_weight(w);
  out["m"] = w.m;
  out["n"] = w.n;
  out["rho_shifted"] = {{"a", rs.a}, {"b", rs.b}};
  std::string symbols;
  for (auto s : diag.symbols) symbols += static_cast<char>(s);
  out["diagram"] = {{"lo", diag.lo}, {"hi", diag.hi}, {"symbols", symbols}};
  out["gamma"] = json::array();
  for (const auto& p : gamma.pairs)
    out["gamma"].push_back({{"i", p.i}, {"j", p.j}, {"value", rs.b[p.j - 1]}});
  out["atypicality"] = rep.atypicality;
  out["maximal"] = rep.maximal;
  out["s_lambda"] = rep.s_lambda.str();
  out["m_lambda_positive"] = json::array();
  for (const auto& alpha : mplus) out["m_lambda_positive"].push_back(to_string(alpha));
  out["glambda_dim"] = rep.glambda_dim.str();
  out["sdim_abs"] = rep.sdim_abs.str();
  return out;
}

void analysis_text(std::ostream& os, const SuperWeight& w) {
  auto rs = rho_shift(w);
  auto gamma = gamma_set(rs);
  auto diag = build_diagram(rs);
  auto mplus = m_lambda_positive(rs, gamma);
  auto rep = superdimension(w);

  os << "weight      " << format_weight(w) << "   (m = " << w.m << ", n = " << w.n << ")\n";
  os << "a           ";
  for (std::size_t i = 0; i < rs.a.size(); ++i) os << (i ? " " : "") << rs.a[i];
  os << "\nb           ";
  for (std::size_t j = 0; j < rs.b.size(); ++j) os << (j ? " " : "") << rs.b[j];
  os << "\n\n" << render(diag) << "\n";
  os << "gamma       ";
  if (gamma.pairs.empty()) os << "(empty)";
  for (const auto& p : gamma.pairs)
    os << "(i=" << p.i << ", j=" << p.j << ", value " << rs.b[p.j - 1] << ") ";
  os << "\natypicality " << rep.atypicality << (rep.maximal ? " (maximal)" : " (not maximal)")
     << "\ns_lambda    " << rep.s_lambda << "\nroots       ";
  if (mplus.empty()) os << "(empty)";
  for (const auto& alpha : mplus) os << to_string(alpha) << " ";
  os << "\ndim g_Lambda factor " << rep.glambda_dim << "\n|sdim|      " << rep.sdim_abs
     << "\n";
}

int run_weight_command(const std::string& text, bool as_json, bool sdim_only) {
  SuperWeight w = parse_weight(text);  // ParseError propagates to main's handler
  try {
    if (sdim_only) {
      std::cout << superdimension(w).sdim_abs.str() << "\n";
    } else if (as_json) {
      std::cout << analysis_json(w).dump(2) << "\n";
    } else {
      analysis_text(std::cout, w);
    }
  } catch (const NotDominantError& e) {
    std::cerr << "invalid weight: " << e.what() << "\n";
    return kExitWeight;
  } catch (const UnsupportedShapeError& e) {
    std::cerr << "invalid weight: " << e.what() << "\n";
    return kExitWeight;
  }
  return kExitOk;
}

int run_batch(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open batch file: " << path << "\n";
    return kExitUsage;
  }
  bool any_error = false;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::string body = line;
    auto hash = body.find('#');
    if (hash != std::string::npos) body = body.substr(0, hash);
    bool blank = true;
    for (char c : body)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    try {
      SuperWeight w = parse_weight(body);
      auto rep = superdimension(w);
      if (format == "tsv") {
        std::cout << format_weight(w) << "\t" << rep.atypicality << "\t"
                  << (rep.maximal ? "true" : "false") << "\t" << rep.s_lambda.str() << "\t"
                  << rep.sdim_abs.str() << "\n";
      } else {
        json rec = {{"weight", format_weight(w)},
                    {"atypicality", rep.atypicality},
                    {"maximal", rep.maximal},
                    {"s_lambda", rep.s_lambda.str()},
                    {"sdim", rep.sdim_abs.str()}};
        std::cout << rec.dump() << "\n";
      }
    } catch (const std::exception& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      any_error = true;
    }
  }
  return any_error ? kExitBatch : kExitOk;
}

std::vector<std::pair<int, int>> parse_shapes(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    auto x = tok.find('x');
    if (x == std::string::npos)
      throw CLI::ValidationError("--shapes", "expected entries like 2x1, got '" + tok + "'");
    out.emplace_back(std::stoi(tok.substr(0, x)), std::stoi(tok.substr(x + 1)));
  }
  return out;
}

int run_verify(const std::string& suite, VerifyOptions opts) {
  if (opts.cutoff == 0) {
    if (const char* env = std::getenv("SUPERDIM_CUTOFF")) opts.cutoff = std::atoll(env);
  }
  bool all_ok = true;
  auto run = [&](const std::string& name) {
    if (suite != "all" && suite != name) return;
    SuiteResult res;
    if (name == "formula") res = run_formula_suite(opts);
    if (name == "lemma2") res = run_lemma2_suite(opts);
    if (name == "engine") res = run_engine_suite(opts);
    if (name == "tableaux") res = run_tableaux_suite(opts);
    all_ok = print_suite(std::cout, res) && all_ok;
  };
  run("formula");
  run("lemma2");
  run("engine");
  run("tableaux");
  return all_ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superdimension calculator for simple gl(m|n)-modules"};
  app.require_subcommand(1);

  std::string weight_text, format = "text";
  auto* analyze = app.add_subcommand("analyze", "full report for one highest weight");
  analyze->add_option("weight", weight_text, "weight as c1,..,cm|d1,..,dn")->required();
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string sdim_text;
  auto* sdim = app.add_subcommand("sdim", "print |sdim| for one highest weight");
  sdim->add_option("weight", sdim_text, "weight as c1,..,cm|d1,..,dn")->required();

  std::string suite = "all", shapes_text, dump_dir;
  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "run cross-check suites");
  verify->add_option("--suite", suite, "formula, lemma2, engine, tableaux, or all")
      ->check(CLI::IsMember({"formula", "lemma2", "engine", "tableaux", "all"}));
  verify->add_option("--max-m", vopts.max_m, "derive shapes with m up to this bound");
  verify->add_option("--max-n", vopts.max_n, "derive shapes with n up to this bound");
  verify->add_option("--shapes", shapes_text, "explicit shape list, e.g. 2x1,2x2");
  verify->add_option("--entry-bound", vopts.entry_bound, "engine sweep entry bound");
  verify->add_option("--cutoff", vopts.cutoff, "engine truncation cutoff (0 = default)");
  verify->add_option("--margin", vopts.margin, "cancellation shell width");
  verify->add_option("--max-r", vopts.max_r, "lemma2 sweep bound");
  verify->add_option("--max-cells", vopts.max_cells, "tableaux sweep partition size bound");
  verify->add_option("--guard", vopts.weyl_guard, "largest allowed Weyl group order m! n!");
  verify->add_option("--dump", dump_dir, "directory for per-case character JSON dumps");

  std::string batch_path, batch_format = "json";
  auto* batch = app.add_subcommand("batch", "process a file of weights, one per line");
  batch->add_option("--file", batch_path, "input file, '#' starts a comment")->required();
  batch->add_option("--format", batch_format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  int lemma_r = 0;
  auto* lemma2 = app.add_subcommand("lemma2", "alternating multinomial sum for one order");
  lemma2->add_option("--r", lemma_r, "composition order")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_weight_command(weight_text, format == "json", false);
    if (sdim->parsed()) return run_weight_command(sdim_text, false, true);
    if (batch->parsed()) return run_batch(batch_path, batch_format);
    if (lemma2->parsed()) {
      BigInt s = lemma2_sum(lemma_r);
      std::cout << s.str() << "\n";
      return s == 1 ? kExitOk : kExitVerify;
    }
    if (verify->parsed()) {
      if (!shapes_text.empty()) vopts.shapes = parse_shapes(shapes_text);
      vopts.dump_dir = dump_dir;
      return run_verify(suite, vopts);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotDominantError& e) {
    std::cerr << "invalid weight: " << e.what() << "\n";
    return kExitWeight;
  } catch (const UnsupportedShapeError& e) {
    std::cerr << "invalid weight: " << e.what() << "\n";
    return kExitWeight;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
