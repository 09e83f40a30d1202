#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bohr/cli.hpp"

int main(int argc, char** argv) {
  using bohr::cli::RunConfig;

  RunConfig cfg;
  std::string format = "json";
  std::optional<std::string> out_path;

  CLI::App app{"Bohr-type radii, functionals and table reproduction"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "Write the report to this file");
    sub->add_option("--tol", cfg.tol, "Root tolerance, in (0, 1e-3]");
    sub->add_option("--scan-step", cfg.scan_step, "Scan step for the minimal-root search");
    sub->add_option("--seed", cfg.seed, "Seed for randomized sweeps");
  };
  auto problem = [&](CLI::App* sub) {
    sub->add_option("--phi", cfg.phi, "monomial, weighted_linear, weighted_quadratic, even_only, odd_only");
    sub->add_option("--p", cfg.p, "Exponent p in (0, 2]");
    sub->add_option("--m", cfg.m, "Start index (refined) or Schwarz map order (rogosinski)");
    sub->add_option("--N", cfg.N, "First tail index (rogosinski)");
    sub->add_option("--mu", cfg.mu, "Constant multiplier mu >= 0");
  };
  auto domain = [&](CLI::App* sub) {
    sub->add_option("--gamma", cfg.gamma, "Omega_gamma parameter in [0, 1)");
    sub->add_option("--lambda-h", cfg.lambda_h, "Domain constant lambda_H > 0");
  };

  auto* radius = app.add_subcommand("radius", "Solve a radius equation for its minimal positive root");
  common(radius);
  problem(radius);
  domain(radius);
  radius->add_option("--kind", cfg.kind, "refined (default) or rogosinski");

  auto* tables = app.add_subcommand("tables", "Recompute the printed root tables");
  common(tables);
  tables->add_option("--id", cfg.table_id, "Table 1..4 (default: all)");
  tables->add_flag("--allow-errata", cfg.allow_errata, "Do not fail on rows flagged as errata");

  auto* verify = app.add_subcommand("verify", "Guarantee sweep below a radius and sharpness probe above it");
  common(verify);
  problem(verify);
  domain(verify);
  verify->add_option("--family", cfg.family,
                     "theorem_c, refined, rogosinski, thm33, thm34, thm35, lemma36 or tables");
  verify->add_option("--beta", cfg.beta, "beta for thm34");
  verify->add_option("--m-deg", cfg.m_deg, "Degree of P for thm33");
  verify->add_option("--tail", cfg.tail, "Q coefficients c_2..c_m for lemma36")->delimiter(',');
  verify->add_option("--id", cfg.table_id, "Table 1..4 for the tables family");
  verify->add_flag("--allow-errata", cfg.allow_errata, "Do not fail on rows flagged as errata");

  auto* calibrate = app.add_subcommand("calibrate", "Build the P or Q improvement polynomial");
  common(calibrate);
  domain(calibrate);
  calibrate->add_option("--kind", cfg.kind, "q (default) or p");
  calibrate->add_option("--tail", cfg.tail, "Q coefficients c_2..c_m")->delimiter(',');
  calibrate->add_option("--m-deg", cfg.m_deg, "Degree of P");

  auto* bloch = app.add_subcommand("bloch", "Bloch-Bohr radii");
  common(bloch);
  bloch->add_option("--theorem", cfg.theorem, "41, 42 or 43");
  bloch->add_option("--domain", cfg.domain, "disk or gamma");
  bloch->add_option("--gamma", cfg.gamma, "Omega_gamma parameter in [0, 1)");
  bloch->add_option("--lambda-h", cfg.lambda_h, "Not accepted; present for a clear diagnostic");
  bloch->add_option("--nu", cfg.nu, "Bloch exponent nu in (0, 1]");

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on r_p for 1 <= p < 2");
  common(bounds);
  bounds->add_option("--p", cfg.p, "Exponent p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bohr::cli::kExitUsage;
  }

  cfg.command = *bohr::cli::parse_command(app.get_subcommands().front()->get_name());
  cfg.format = *bohr::cli::parse_format(format);
  cfg.out_path = out_path;
  return bohr::cli::run(cfg, std::cout, std::cerr);
}
