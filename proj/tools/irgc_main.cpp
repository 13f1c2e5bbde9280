#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "irgc/model_io.hpp"
#include "irgc/runner.hpp"
#include "irgc/solvers.hpp"

namespace fs = std::filesystem;

namespace {

irgc::SolverChoice parse_solver(const std::string& name) {
  if (name == "irgc") return irgc::SolverChoice::kIrgc;
  if (name == "irgc_expansion") return irgc::SolverChoice::kIrgcExpansion;
  if (name == "expansion") return irgc::SolverChoice::kExpansion;
  if (name == "brute_force") return irgc::SolverChoice::kBruteForce;
  throw CLI::ValidationError("--solver", "unknown solver '" + name + "'");
}

int run_command(const std::vector<std::string>& config_paths, const std::string& solver_override,
                const std::string& out_override, std::optional<double> lower_bound, int jobs) {
  std::vector<irgc::RunConfig> configs;
  for (const std::string& path : config_paths) {
    irgc::RunConfig cfg = irgc::read_config(path);
    if (!solver_override.empty()) cfg.solver = parse_solver(solver_override);
    if (!out_override.empty()) {
      // With several configs, keep output directories isolated per config.
      cfg.out_dir = config_paths.size() == 1
                        ? out_override
                        : (fs::path(out_override) / fs::path(path).stem()).string();
    }
    if (lower_bound) cfg.lower_bound = *lower_bound;
    configs.push_back(std::move(cfg));
  }

  int status = 0;
  if (jobs <= 1 || configs.size() <= 1) {
    for (const irgc::RunConfig& cfg : configs) status |= irgc::run(cfg);
    return status;
  }

  std::mutex mutex;
  std::size_t next = 0;
  auto worker = [&]() {
    while (true) {
      std::size_t index;
      {
        std::lock_guard<std::mutex> lock(mutex);
        if (next >= configs.size()) return;
        index = next++;
      }
      int rc = irgc::run(configs[index]);
      std::lock_guard<std::mutex> lock(mutex);
      status |= rc;
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iteratively reweighted graph cut for multi-label MRF energies"};
  app.require_subcommand(1);

  std::vector<std::string> config_paths;
  std::string solver_override;
  std::string out_override;
  double lower_bound = 0.0;
  int jobs = 1;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a solver on one or more problem configs");
  run_cmd->add_option("config", config_paths, "config file(s)")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--solver", solver_override,
                      "irgc | irgc_expansion | expansion | brute_force");
  run_cmd->add_option("--out", out_override, "output directory");
  CLI::Option* lb_opt = run_cmd->add_option("--lower-bound", lower_bound,
                                            "external lower bound E_b for the quality measure");
  run_cmd->add_option("--jobs", jobs, "run configs in parallel")->check(CLI::PositiveNumber);

  std::string model_path;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimizer for a model file");
  oracle_cmd->add_option("model", model_path, "synthetic model file")
      ->required()
      ->check(CLI::ExistingFile);

  std::string mem_config_path;
  CLI::App* mem_cmd = app.add_subcommand("mem-estimate", "Arc count of the multi-label graph");
  mem_cmd->add_option("config", mem_config_path, "config file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      std::optional<double> lb;
      if (lb_opt->count() > 0) lb = lower_bound;
      return run_command(config_paths, solver_override, out_override, lb, jobs);
    }
    if (oracle_cmd->parsed()) {
      irgc::MRFModel model = irgc::read_model_file(model_path);
      auto [x, e] = irgc::brute_force_min(model);
      std::cout << "energy " << e << "\nlabeling";
      for (int label : x) std::cout << " " << label;
      std::cout << "\n";
      return 0;
    }
    if (mem_cmd->parsed()) {
      irgc::RunConfig cfg = irgc::read_config(mem_config_path);
      std::cout << irgc::memory_estimate(cfg) << "\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
