#include <iostream>

#include <CLI11.hpp>

#include "clhopf/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace clhopf::cli;
  CLI::App app{"clhopf: exact Clifford biconvolutions, antipodes and crossings"};
  app.set_version_flag("--version", "clhopf " CLHOPF_VERSION);
  std::string config_path, out_path, format;
  std::vector<std::string> commands, specializations;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  app.add_option("--config", config_path, "job config (key = value text or JSON)")->check(CLI::ExistingFile);
  app.add_option("--command", commands, "analysis to run; repeatable, replaces the config's commands")
      ->delimiter(',');
  app.add_option("--seed", seed, "seed for sweeps");
  app.add_option("--count", count, "sweep size");
  app.add_option("--out", out_path, "report path (default: stdout)");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--specialize", specializations, "k=v,... ; repeatable, replaces the config's specializations");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  JobConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path);
    if (!commands.empty()) config.commands = commands;
    if (seed) config.seed = *seed;
    if (count) config.count = *count;
    if (!out_path.empty()) config.output = out_path;
    if (!format.empty()) config.format = format;
    if (!specializations.empty()) {
      config.specializations.clear();
      for (const auto& s : specializations) config.specializations.push_back(parse_specialization(s));
    }
  } catch (const InputError& e) {
    std::cerr << "clhopf: " << e.what() << "\n";
    return 1;
  }
  return run_and_write(config, std::cout, std::cerr);
}
