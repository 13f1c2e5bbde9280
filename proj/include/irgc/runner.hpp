#ifndef IRGC_RUNNER_HPP
#define IRGC_RUNNER_HPP

#include <optional>
#include <string>

#include "irgc/mrf.hpp"
#include "irgc/priors.hpp"
#include "irgc/solvers.hpp"
#include "irgc/vision.hpp"

namespace irgc {

enum class Task { kStereo, kInpaint, kSynthetic };
enum class SolverChoice { kIrgc, kIrgcExpansion, kExpansion, kBruteForce };

struct RunConfig {
  Task task = Task::kSynthetic;

  // stereo
  std::string left_path;
  std::string right_path;
  int labels = 16;
  StereoMatcher matcher = StereoMatcher::kBirchfieldTomasi;

  // inpaint
  std::string image_path;
  std::string mask_path;  // optional; empty = fully observed
  int label_step = 1;

  // synthetic
  std::string model_path;

  PriorSpec prior = PriorSpec::truncated_linear(1.0);
  bool uniform_gamma = true;
  double gamma = 1.0;
  GradientGammaRule gamma_rule;
  int connectivity = 4;

  SolverChoice solver = SolverChoice::kIrgc;
  SolverOptions options;
  std::string out_dir = "out";
  std::optional<double> lower_bound;
};

// Flat "key value" config file; '#' starts a comment.
RunConfig read_config(const std::string& path);

// (E - E_b) / E_b * 100.
double quality(double energy_value, double lower_bound);

// Builds the configured model (stereo pair / inpainting task / model file).
// For image tasks the grid dimensions are returned through width/height.
MRFModel build_problem(const RunConfig& config, int& width, int& height);

// Runs the configured solver and writes labels.pgm, trace.csv and summary.txt
// to the output directory. Returns the process exit status; on failure the
// partial outputs are removed and a diagnostic is printed to stderr.
int run(const RunConfig& config);

std::int64_t memory_estimate(const RunConfig& config);

}  // namespace irgc

#endif  // IRGC_RUNNER_HPP
