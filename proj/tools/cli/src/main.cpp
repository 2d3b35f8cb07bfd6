#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "renyi/cli.hpp"
#include "renyi/version.hpp"

namespace {

struct Flag {
  const char* key;
  const char* help;
};

const std::map<renyi::cli::Command, std::vector<Flag>>& command_flags() {
  using renyi::cli::Command;
  static const std::map<Command, std::vector<Flag>> flags = {
      {Command::fig1,
       {{"r-grid", "Renyi orders: list, start:stop:step or log:start:stop:count (default 0.1:0.9:0.1)"},
        {"sigma2", "lognormal variances (default 0.1,1,10)"}}},
      {Command::fig2, {{"r", "Renyi order (default 0.1)"}, {"n-max", "largest dimension (default 64)"}}},
      {Command::fig3,
       {{"eps-grid", "mixing weights (default log:1e-4:0.5:25)"},
        {"p", "lower moment order (default 0)"},
        {"q", "upper moment order (default 2)"}}},
      {Command::entropy_bound,
       {{"family", "lognormal, gaussian or gaussian-vector"},
        {"mu", "location"},
        {"sigma2", "variance"},
        {"n", "dimension for gaussian-vector"},
        {"r", "Renyi order"},
        {"p", "lower moment order; omit p and q to optimize"},
        {"q", "upper moment order"}}},
      {Command::mi_bound,
       {{"channel", "awgn-gaussian, awgn-two-point or mixture-two-point"},
        {"var", "input variance for awgn-gaussian"},
        {"eps", "weight of the second atom"},
        {"a", "location of the second atom"},
        {"p", "lower moment order"},
        {"q", "upper moment order"},
        {"t", "exponent of the similarity bound"},
        {"r", "Renyi order of the output entropy bound"}}},
      {Command::verify, {}},
  };
  return flags;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace renyi::cli;

  CLI::App app{"Two-moment Renyi entropy and mutual information bounds"};
  app.set_version_flag("--version", std::string(renyi::kVersion));
  app.require_subcommand(1);

  struct Bound {
    CLI::App* sub;
    Command command;
    std::map<std::string, std::string> values;
    std::string out;
    std::string format = "csv";
  };
  std::vector<Bound> subs;
  subs.reserve(command_flags().size());
  for (const auto& [command, flags] : command_flags()) {
    subs.push_back(Bound{nullptr, command, {}, {}, "csv"});
  }
  std::size_t i = 0;
  for (const auto& [command, flags] : command_flags()) {
    Bound& b = subs[i++];
    b.sub = app.add_subcommand(to_string(command));
    for (const auto& f : flags) b.sub->add_option(std::string("--") + f.key, b.values[f.key], f.help);
    b.sub->add_option("--seed", b.values["seed"], "RNG seed (default: RENYI_BOUNDS_SEED, else built-in)");
    b.sub->add_option("--tol", b.values["tol"], "relative quadrature tolerance");
    b.sub->add_option("--out", b.out, "output file (default stdout)");
    b.sub->add_option("--format", b.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidSpec;
  }

  for (auto& b : subs) {
    if (!b.sub->parsed()) continue;
    RunSpec spec;
    spec.command = b.command;
    spec.output_path = b.out;
    spec.format = parse_format(b.format);
    for (const auto& [k, v] : b.values) {
      if (b.sub->count("--" + k) > 0) spec.parameters[k] = v;
    }
    return run(spec);
  }
  return kExitInvalidSpec;
}
