#ifndef IRGC_MRF_HPP
#define IRGC_MRF_HPP

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "irgc/priors.hpp"

namespace irgc {

using Labeling = std::vector<int>;
using EdgeWeights = std::vector<double>;

struct MRFEdge {
  int p;
  int q;
  double gamma;
};

// Pairwise MRF energy
//   E(x) = sum_p f_p(x_p) + sum_(p,q) gamma_pq * theta(|x_p - x_q|)
// over an ordered label set {0 .. L-1}, with one shared prior decomposition
// for all edges.
class MRFModel {
 public:
  MRFModel(int node_count, int label_count,
           std::shared_ptr<const PriorDecomposition> prior);

  double& unary(int p, int label);
  double unary(int p, int label) const;
  void add_edge(int p, int q, double gamma);

  int node_count() const { return node_count_; }
  int label_count() const { return label_count_; }
  const std::vector<MRFEdge>& edges() const { return edges_; }
  const PriorDecomposition& prior() const { return *prior_; }
  std::shared_ptr<const PriorDecomposition> prior_ptr() const { return prior_; }

 private:
  int node_count_;
  int label_count_;
  std::vector<double> unary_;  // node-major, label minor
  std::vector<MRFEdge> edges_;
  std::shared_ptr<const PriorDecomposition> prior_;
};

double energy(const MRFModel& model, const Labeling& x);

// sum_p f_p(x_p) + sum_(p,q) w_pq * gamma_pq * g(|x_p - x_q|)
double surrogate_energy(const MRFModel& model, const Labeling& x, const EdgeWeights& w);

// Grid edge enumeration: row-major pixels, per pixel in order right, down,
// down-right, down-left (the last two only for 8-connectivity).
std::vector<std::pair<int, int>> grid_edges(int width, int height, int connectivity);

// gamma(p, q) supplies the constant edge weight for grid edge (p, q).
MRFModel build_grid(int width, int height, int connectivity, int label_count,
                    const std::vector<double>& unary,
                    const std::function<double(int, int)>& gamma,
                    std::shared_ptr<const PriorDecomposition> prior);

MRFModel build_grid(int width, int height, int connectivity, int label_count,
                    const std::vector<double>& unary, double uniform_gamma,
                    std::shared_ptr<const PriorDecomposition> prior);

}  // namespace irgc

#endif  // IRGC_MRF_HPP
