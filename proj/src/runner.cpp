#include "irgc/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "irgc/model_io.hpp"
#include "irgc/multilabel_graph.hpp"

namespace irgc {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void config_fail(const std::string& path, int line, const std::string& what) {
  std::ostringstream msg;
  msg << path << ":" << line << ": " << what;
  throw std::runtime_error(msg.str());
}

}  // namespace

RunConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);

  RunConfig cfg;
  bool have_prior = false;
  PriorKind prior_kind = PriorKind::kTruncatedLinear;
  double lambda = 1.0, alpha = 0.75, beta = 50.0;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string key;
    if (!(row >> key) || key[0] == '#') continue;
    auto need_string = [&](std::string& dst) {
      if (!(row >> dst)) config_fail(path, line_no, "missing value for '" + key + "'");
    };
    auto need_double = [&](double& dst) {
      if (!(row >> dst)) config_fail(path, line_no, "missing numeric value for '" + key + "'");
    };
    auto need_int = [&](int& dst) {
      if (!(row >> dst)) config_fail(path, line_no, "missing integer value for '" + key + "'");
    };

    if (key == "task") {
      std::string v;
      need_string(v);
      if (v == "stereo") cfg.task = Task::kStereo;
      else if (v == "inpaint") cfg.task = Task::kInpaint;
      else if (v == "synthetic") cfg.task = Task::kSynthetic;
      else config_fail(path, line_no, "unknown task '" + v + "'");
    } else if (key == "left") need_string(cfg.left_path);
    else if (key == "right") need_string(cfg.right_path);
    else if (key == "image") need_string(cfg.image_path);
    else if (key == "mask") need_string(cfg.mask_path);
    else if (key == "model") need_string(cfg.model_path);
    else if (key == "labels") need_int(cfg.labels);
    else if (key == "label_step") need_int(cfg.label_step);
    else if (key == "matcher") {
      std::string v;
      need_string(v);
      if (v == "ad" || v == "absolute_difference") cfg.matcher = StereoMatcher::kAbsoluteDifference;
      else if (v == "bt" || v == "birchfield_tomasi") cfg.matcher = StereoMatcher::kBirchfieldTomasi;
      else config_fail(path, line_no, "unknown matcher '" + v + "'");
    } else if (key == "prior") {
      std::string v;
      need_string(v);
      have_prior = true;
      if (v == "truncated_linear") prior_kind = PriorKind::kTruncatedLinear;
      else if (v == "truncated_quadratic") prior_kind = PriorKind::kTruncatedQuadratic;
      else if (v == "cauchy") prior_kind = PriorKind::kCauchy;
      else if (v == "corrupted_gaussian") prior_kind = PriorKind::kCorruptedGaussian;
      else if (v == "convex_linear") prior_kind = PriorKind::kConvexLinear;
      else if (v == "convex_quadratic") prior_kind = PriorKind::kConvexQuadratic;
      else config_fail(path, line_no, "unknown prior '" + v + "'");
    } else if (key == "lambda") need_double(lambda);
    else if (key == "alpha") need_double(alpha);
    else if (key == "beta") need_double(beta);
    else if (key == "gamma") {
      need_double(cfg.gamma);
      cfg.uniform_gamma = true;
    } else if (key == "gamma_low") {
      need_double(cfg.gamma_rule.gamma_low_gradient);
      cfg.uniform_gamma = false;
    } else if (key == "gamma_high") {
      need_double(cfg.gamma_rule.gamma_high_gradient);
      cfg.uniform_gamma = false;
    } else if (key == "grad_threshold") need_int(cfg.gamma_rule.threshold);
    else if (key == "connectivity") need_int(cfg.connectivity);
    else if (key == "solver") {
      std::string v;
      need_string(v);
      if (v == "irgc") cfg.solver = SolverChoice::kIrgc;
      else if (v == "irgc_expansion") cfg.solver = SolverChoice::kIrgcExpansion;
      else if (v == "expansion") cfg.solver = SolverChoice::kExpansion;
      else if (v == "brute_force") cfg.solver = SolverChoice::kBruteForce;
      else config_fail(path, line_no, "unknown solver '" + v + "'");
    } else if (key == "max_iterations") need_int(cfg.options.max_iterations);
    else if (key == "initial_weight") need_double(cfg.options.initial_weight);
    else if (key == "convergence") need_double(cfg.options.convergence);
    else if (key == "out") need_string(cfg.out_dir);
    else if (key == "lower_bound") {
      double v;
      need_double(v);
      cfg.lower_bound = v;
    } else {
      config_fail(path, line_no, "unknown key '" + key + "'");
    }
  }

  if (have_prior) {
    switch (prior_kind) {
      case PriorKind::kTruncatedLinear: cfg.prior = PriorSpec::truncated_linear(lambda); break;
      case PriorKind::kTruncatedQuadratic: cfg.prior = PriorSpec::truncated_quadratic(lambda); break;
      case PriorKind::kCauchy: cfg.prior = PriorSpec::cauchy(lambda); break;
      case PriorKind::kCorruptedGaussian: cfg.prior = PriorSpec::corrupted_gaussian(alpha, beta); break;
      case PriorKind::kConvexLinear: cfg.prior = PriorSpec::convex_linear(); break;
      case PriorKind::kConvexQuadratic: cfg.prior = PriorSpec::convex_quadratic(); break;
    }
  } else if (cfg.task == Task::kInpaint) {
    cfg.prior = PriorSpec::truncated_quadratic(lambda);
  } else {
    cfg.prior.lambda = lambda;
  }
  return cfg;
}

double quality(double energy_value, double lower_bound) {
  if (lower_bound <= 0.0) throw std::invalid_argument("quality: lower bound must be positive");
  if (energy_value < lower_bound - 1e-9)
    throw std::invalid_argument("quality: energy below the lower bound");
  return (energy_value - lower_bound) / lower_bound * 100.0;
}

MRFModel build_problem(const RunConfig& config, int& width, int& height) {
  switch (config.task) {
    case Task::kStereo: {
      GrayImage left = read_pgm(config.left_path);
      GrayImage right = read_pgm(config.right_path);
      width = left.width;
      height = left.height;
      std::vector<double> unary = stereo_unaries(left, right, config.labels, config.matcher);
      auto prior = decompose(config.prior);
      if (config.uniform_gamma)
        return build_grid(width, height, config.connectivity, config.labels, unary, config.gamma,
                          prior);
      std::vector<double> gammas = stereo_gammas(left, config.gamma_rule, config.connectivity);
      std::size_t next = 0;
      return build_grid(width, height, config.connectivity, config.labels, unary,
                        [&gammas, &next](int, int) { return gammas[next++]; }, prior);
    }
    case Task::kInpaint: {
      GrayImage image = read_pgm(config.image_path);
      width = image.width;
      height = image.height;
      std::vector<std::uint8_t> observed;
      if (!config.mask_path.empty()) {
        GrayImage mask = read_pgm(config.mask_path);
        if (mask.width != image.width || mask.height != image.height)
          throw std::runtime_error("mask dimensions do not match image: " + config.mask_path);
        observed.assign(mask.pixels.begin(), mask.pixels.end());
      }
      return inpainting_model(image, observed, config.label_step, config.gamma,
                              config.prior.lambda);
    }
    case Task::kSynthetic: {
      MRFModel model = read_model_file(config.model_path);
      width = model.node_count();
      height = 1;
      return model;
    }
  }
  throw std::logic_error("build_problem: unknown task");
}

namespace {

const char* phase_name(Phase phase) {
  return phase == Phase::kGraphCut ? "graph_cut" : "expansion";
}

void write_trace_csv(const SolveTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "iteration,phase,time_seconds,energy,surrogate\n";
  out << std::setprecision(17);
  for (const TraceRecord& rec : trace)
    out << rec.iteration << "," << phase_name(rec.phase) << "," << rec.seconds << "," << rec.energy
        << "," << rec.surrogate << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int run(const RunConfig& config) {
  std::vector<fs::path> written;
  try {
    int width = 0, height = 0;
    MRFModel model = build_problem(config, width, height);

    SolveResult result;
    auto start = std::chrono::steady_clock::now();
    switch (config.solver) {
      case SolverChoice::kIrgc:
        result = irgc_solve(model, config.options);
        break;
      case SolverChoice::kIrgcExpansion:
        result = irgc_hybrid(model, config.options);
        break;
      case SolverChoice::kExpansion:
        result = expansion_solve(model, config.options);
        break;
      case SolverChoice::kBruteForce: {
        auto [x, e] = brute_force_min(model);
        result.labeling = std::move(x);
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.trace.push_back({0, Phase::kGraphCut, seconds, e, e});
        break;
      }
    }
    double final_energy = energy(model, result.labeling);
    double wall_time = result.trace.empty() ? 0.0 : result.trace.back().seconds;
    int iterations = result.trace.empty() ? 0 : result.trace.back().iteration + 1;

    fs::create_directories(config.out_dir);
    fs::path labels_path = fs::path(config.out_dir) / "labels.pgm";
    fs::path trace_path = fs::path(config.out_dir) / "trace.csv";
    fs::path summary_path = fs::path(config.out_dir) / "summary.txt";

    written.push_back(labels_path);
    write_pgm(labels_to_image(result.labeling, width, height, model.label_count()),
              labels_path.string());
    written.push_back(trace_path);
    write_trace_csv(result.trace, trace_path.string());

    written.push_back(summary_path);
    std::ofstream summary(summary_path);
    if (!summary) throw std::runtime_error("cannot write " + summary_path.string());
    summary << std::setprecision(17);
    summary << "final_energy " << final_energy << "\n";
    summary << "iterations " << iterations << "\n";
    summary << "wall_time_seconds " << wall_time << "\n";
    if (config.lower_bound) {
      summary << "lower_bound " << *config.lower_bound << "\n";
      summary << "quality_percent " << quality(final_energy, *config.lower_bound) << "\n";
    }
    if (!summary) throw std::runtime_error("write failed: " + summary_path.string());
    return 0;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    std::error_code ec;
    for (const fs::path& p : written) fs::remove(p, ec);
    return 1;
  }
}

std::int64_t memory_estimate(const RunConfig& config) {
  int width = 0, height = 0;
  MRFModel model = build_problem(config, width, height);
  return MultiLabelGraph::estimate_memory(model);
}

}  // namespace irgc
