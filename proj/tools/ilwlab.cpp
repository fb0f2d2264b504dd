// Command-line driver: ilwlab <experiment> --config path.json [--out dir] [--threads k]
//
// Exit codes: 0 success, 2 validation error, 3 blow-up / resolution rejection.
// ILWLAB_FFT_THREADS overrides the worker thread count when set.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ilwlab/errors.hpp"
#include "ilwlab/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ilwlab - pseudospectral laboratory for ILW/BO dynamics on the torus"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int threads = 0;

  const std::vector<std::string> experiments = {
      "solve", "conserve", "symbols", "deepwater", "gauge_check", "scaling_check",
      "galilean_check"};
  for (const auto& name : experiments) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "experiment configuration (JSON)")
        ->required();
    sub->add_option("--out", out_dir, "output directory (overrides config)");
    sub->add_option("--threads", threads, "worker threads for independent members");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ifstream in(config_path);
    if (!in) throw ilw::ValidationError("cannot open config file " + config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();

    ilw::ExperimentConfig config = ilw::ExperimentConfig::parse_json(buffer.str());

    const std::string subcommand = app.get_subcommands().front()->get_name();
    if (config.experiment != subcommand)
      throw ilw::ValidationError("config experiment '" + config.experiment +
                                 "' does not match subcommand '" + subcommand + "'");

    if (!out_dir.empty()) config.out_dir = out_dir;
    if (threads > 0) config.threads = threads;
    if (const char* env = std::getenv("ILWLAB_FFT_THREADS")) {
      const int env_threads = std::atoi(env);
      if (env_threads > 0) config.threads = env_threads;
    }

    ilw::run_experiment(config);
  } catch (const ilw::BlowupError& e) {
    std::cerr << "blow-up: " << e.what() << "\n";
    return 3;
  } catch (const ilw::ResolutionError& e) {
    std::cerr << "resolution rejection: " << e.what() << "\n";
    return 3;
  } catch (const ilw::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
