#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "sympow/cli.hpp"
#include "sympow/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of symmetric power identities"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  sympow::cli::RunConfig config;
  std::string caps;
  std::size_t n = 0, d = 0, x = 0, z = 0;
  std::uint64_t q = 0;
  std::uint32_t r = 0;
  std::string input, output;

  app.add_option("--input", input, "Variety or extension input file");
  app.add_option("--n", n, "Symmetric power degree");
  app.add_option("--q", q, "Field size");
  app.add_option("--r", r, "Extension degree");
  app.add_option("--d", d, "Module dimension or set size");
  app.add_option("--x", x, "Non-base points of X");
  app.add_option("--z", z, "Non-base points of Z");
  app.add_option("--seed", config.seed, "Seed for randomized audits");
  app.add_option("--caps", caps, "Resource limits, name=value,...");
  app.add_option("--out", output, "Write the JSON report here");
  const std::map<std::string, std::string> help = {
      {"sym-count", "Count F_q-points of Sym^n X from closed points, with an orbit oracle"},
      {"kunneth", "Check Sym^n(X + Y) against the convolution of Sym X and Sym Y"},
      {"tower", "Point counts of the Kunneth tower, or the pointed-set ladder"},
      {"etale-dim", "Dimension and factors of the invariant subalgebra of L^(tensor n)"},
      {"theta-galois", "Compare Hom(-, Fbar) on both sides of the theta map"},
      {"transfer", "Norm and transfer identities for (Q^d)^(tensor n)"},
      {"prop81", "Inverse of the linearization map u"},
      {"lambda-audit", "Lambda-structure axioms on split sequences of pointed sets"},
      {"invariant-ring", "Presentation and point counts of Sym^2 A^2"},
      {"suite", "Run every acceptance criterion"},
  };
  for (const auto& name : sympow::cli::commands()) {
    const auto it = help.find(name);
    app.add_subcommand(name, it == help.end() ? "" : it->second);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!input.empty()) config.input_path = input;
  if (!output.empty()) config.output_path = output;
  if (app.count("--n")) config.n = n;
  if (app.count("--q")) config.q = q;
  if (app.count("--r")) config.r = r;
  if (app.count("--d")) config.d = d;
  if (app.count("--x")) config.x = x;
  if (app.count("--z")) config.z = z;
  try {
    if (!caps.empty()) config.caps = sympow::cli::parse_caps(caps);
  } catch (const sympow::Error& e) {
    std::cerr << "sympow: " << e.what() << "\n";
    return 2;
  }
  return sympow::cli::run(config, std::cout, std::cerr);
}
