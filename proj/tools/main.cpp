// wrtwist: well-rounded twists of ideal lattices in Q(sqrt(-D)).

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "wrtwist/cli.hpp"

namespace cli = wrtwist::cli;

int main(int argc, char** argv) {
  CLI::App app{"Well-rounded twists of ideal lattices of imaginary quadratic fields"};
  app.set_version_flag("--version", "wrtwist 0.1.0");

  std::string command, gens, canonical, format = "json", report_path;
  std::int64_t d = 0;
  long long oracle_bound = 0;

  app.add_option("command", command, "canonical | twists | classes | verify | oracle-check")
      ->required()
      ->check(CLI::IsMember({"canonical", "twists", "classes", "verify", "oracle-check"}));
  app.add_option("--d", d, "squarefree D > 0 for the field Q(sqrt(-D))")->required();
  auto* g = app.add_option("--gens", gens, "ideal generators \"p,q;p,q;...\" meaning p + q*delta");
  auto* c = app.add_option("--canonical", canonical, "canonical basis \"t,y,g\"");
  g->excludes(c);
  app.add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
  auto* ob = app.add_option("--oracle-bound", oracle_bound, "entry bound for oracle-check (default: safe bound)");
  auto* rp = app.add_option("--report", report_path, "verify: JSON report file written by `twists`")
                 ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  cli::RunConfig cfg;
  cfg.d = d;
  try {
    cfg.command = cli::parse_command(command);
    cfg.format = cli::parse_format(format);
    if (*g) cfg.generators = cli::parse_generators(gens);
    if (*c) cfg.canonical = cli::parse_canonical(canonical);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
  if (*ob) cfg.oracle_bound = oracle_bound;
  if (*rp) {
    std::ifstream in(report_path);
    cfg.report = std::string(std::istreambuf_iterator<char>(in), {});
  }

  const auto result = cli::run(cfg);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "error: " << result.error << '\n';
  return result.exit_code;
}
