#include <CLI11.hpp>
#include <iostream>

#include "nfkit/cli.hpp"

int main(int argc, char** argv) {
  using nfkit::cli::Command;
  nfkit::cli::RunConfig cfg;
  std::string format = "json";

  CLI::App app{"nfkit: resonances, normal-form spaces, centralizers and Jacobi multipliers in exact arithmetic"};
  app.require_subcommand(1);
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto spectrum_opt = [&](CLI::App* sub) { sub->add_option("--spectrum", cfg.spectrum, "spectrum JSON")->required(); };
  auto field_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--field", cfg.field, "field JSON");
    if (required) o->required();
  };
  auto opt_int = [](CLI::App* sub, const char* name, std::optional<int>& target, const char* help) {
    sub->add_option_function<int>(name, [&target](const int& v) { target = v; }, help);
  };

  std::vector<std::pair<CLI::App*, Command>> subs;
  auto add = [&](const char* name, const char* help, Command c) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    subs.emplace_back(sub, c);
    return sub;
  };

  auto* res = add("resonances", "resonance set, Hilbert basis, U/W split", Command::Resonances);
  spectrum_opt(res);
  opt_int(res, "--max-degree", cfg.max_degree, "degree cap for infinite resonance sets");

  auto* basis = add("pdnf-basis", "resonant vector monomials", Command::PdnfBasis);
  spectrum_opt(basis);
  opt_int(basis, "--max-degree", cfg.max_degree, "largest degree listed");

  auto* cent = add("centralizer", "exact or truncated centralizer", Command::Centralizer);
  spectrum_opt(cent);
  field_opt(cent, true);
  opt_int(cent, "--truncate", cfg.truncate, "solve modulo degree > D instead of exactly");

  auto* norm = add("normalizer", "truncated normalizer, optional pair reduction", Command::Normalizer);
  spectrum_opt(norm);
  field_opt(norm, true);
  opt_int(norm, "--truncate", cfg.truncate, "truncation degree D");
  norm->add_option("--g", cfg.g, "field JSON of a candidate g");
  norm->add_option("--lambda", cfg.lambda, "series JSON of its cofactor");

  auto* inv = add("invariants", "monomial invariants, free-module and one-divisor checks", Command::Invariants);
  spectrum_opt(inv);
  inv->add_option("--search-bound", cfg.search_bound, "enumeration bound for unbounded searches");

  auto* red = add("reduce", "reduction by invariants and certificates", Command::Reduce);
  spectrum_opt(red);
  field_opt(red, true);
  red->add_option("--cap", cfg.cap, "degree cap for the ladders");

  auto* jac = add("jacobi", "inverse Jacobi multiplier ladder", Command::Jacobi);
  spectrum_opt(jac);
  field_opt(jac, true);
  opt_int(jac, "--r-min", cfg.r_min, "lowest order tried");
  opt_int(jac, "--r-max", cfg.r_max, "highest order tried");
  opt_int(jac, "--truncate", cfg.truncate, "truncation degree D");

  auto* cls = add("classify3", "dimension-3 classifier for diag(d1, d2, -d3)", Command::Classify3);
  cls->add_option("d", cfg.triple, "d1 d2 d3")->expected(3)->required();

  auto* chk = add("check", "validate inputs and PDNF shape", Command::Check);
  spectrum_opt(chk);
  field_opt(chk, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (const auto& [sub, c] : subs)
    if (sub->parsed()) cfg.command = c;
  cfg.format = format == "text" ? nfkit::cli::Format::Text : nfkit::cli::Format::Json;
  return nfkit::cli::run(cfg, std::cout, std::cerr);
}
