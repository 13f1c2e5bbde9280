#ifndef IRGC_SOLVERS_HPP
#define IRGC_SOLVERS_HPP

#include <utility>
#include <vector>

#include "irgc/mrf.hpp"

namespace irgc {

enum class Phase { kGraphCut, kExpansion };

struct TraceRecord {
  int iteration;
  Phase phase;
  double seconds;    // wall time since solve start
  double energy;     // true energy of the labeling after this step
  double surrogate;  // weighted surrogate value of the same labeling
};

using SolveTrace = std::vector<TraceRecord>;

struct SolverOptions {
  double initial_weight = 0.5;  // epsilon for the constant-weight bootstrap
  int max_iterations = 100;
  double convergence = 1e-9;  // absolute energy-decrease threshold
  bool hybrid = false;
};

struct SolveResult {
  Labeling labeling;
  SolveTrace trace;
};

// w_pq = h_b^s(g(|x_p - x_q|)) for every edge.
EdgeWeights update_weights(const MRFModel& model, const Labeling& x);

// Iteratively reweighted graph cut: constant-weight bootstrap, then reweighted
// exact surrogate minimization until the true energy stops decreasing.
SolveResult irgc_solve(const MRFModel& model, const SolverOptions& opts = {});

// One ascending sweep of alpha-expansion on the true energy. Non-submodular
// move terms are truncated (cross terms raised by half the deficit each) and
// every move is accepted only if it does not increase the true energy, so the
// returned labeling satisfies E(out) <= E(x).
Labeling expansion_pass(const MRFModel& model, const Labeling& x);

// Standalone alpha-expansion from the all-zero labeling: repeats full sweeps
// until a sweep no longer decreases the energy. One trace record per sweep.
SolveResult expansion_solve(const MRFModel& model, const SolverOptions& opts = {});

// IRGC with one expansion pass on the true energy after every graph-cut step.
SolveResult irgc_hybrid(const MRFModel& model, const SolverOptions& opts = {});

// Exhaustive minimizer; returns the lexicographically smallest argmin.
// Guarded to L^n <= 10^7.
std::pair<Labeling, double> brute_force_min(const MRFModel& model);

}  // namespace irgc

#endif  // IRGC_SOLVERS_HPP
