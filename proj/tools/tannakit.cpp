#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tannakit/cli/commands.hpp"
#include "tannakit/exactlin/kernels.hpp"

namespace {

using tannakit::cli::CommandOptions;
using tannakit::cli::RunConfig;

struct Common {
  std::string spec;
  std::optional<std::size_t> bound;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("spec", c.spec, "JSON spec file")->required();
  sub->add_option("--bound", c.bound, "degree or length bound");
  sub->add_option("--format", c.format, "json, text or latex")->check(CLI::IsMember({"json", "text", "latex"}));
  sub->add_option("--out", c.out, "write the document here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  tannakit::exactlin::set_max_threads_from_env();

  CLI::App app{"Exact computations with quadratic algebras and their quantum symmetry bialgebras"};
  app.require_subcommand(1);
  Common common;
  CommandOptions options;
  std::vector<std::string> leq, interval, fiber;

  for (const char* name : tannakit::cli::kCommands) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, common);
    if (std::string(name) == "poset") {
      sub->add_option("--leq", leq, "decide LAMBDA <= MU")->expected(2);
      sub->add_option("--interval", interval, "list [LAMBDA, MU]")->expected(2);
    }
    if (std::string(name) == "comod") {
      sub->add_option("--word", options.words, "word to tabulate (repeatable)");
      sub->add_option("--fiber", fiber, "torus weight P Q")->expected(2);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (leq.size() == 2) options.leq = std::make_pair(leq[0], leq[1]);
  if (interval.size() == 2) options.interval = std::make_pair(interval[0], interval[1]);
  if (fiber.size() == 2) {
    try {
      options.fiber = std::make_pair(std::stoi(fiber[0]), std::stoi(fiber[1]));
    } catch (const std::exception&) {
      std::cerr << "error: --fiber expects two integers\n";
      return 1;
    }
  }

  RunConfig config;
  config.bound = common.bound;
  config.format = tannakit::cli::parse_format(common.format);

  std::ifstream in(common.spec);
  if (!in) {
    std::cerr << "error: cannot read " << common.spec << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  const auto result = tannakit::cli::run(app.get_subcommands().front()->get_name(), buf.str(), config, options);
  if (result.exit_code != 0) {
    std::cerr << "error: " << result.error << "\n";
    return result.exit_code;
  }
  if (common.out.empty()) {
    std::cout << result.document;
  } else {
    std::ofstream out(common.out, std::ios::binary);
    out << result.document;
    if (!out) {
      std::cerr << "error: cannot write " << common.out << "\n";
      return 1;
    }
  }
  return 0;
}
