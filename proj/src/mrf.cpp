#include "irgc/mrf.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace irgc {

MRFModel::MRFModel(int node_count, int label_count,
                   std::shared_ptr<const PriorDecomposition> prior)
    : node_count_(node_count),
      label_count_(label_count),
      unary_(static_cast<std::size_t>(node_count) * static_cast<std::size_t>(label_count), 0.0),
      prior_(std::move(prior)) {
  if (node_count <= 0) throw std::invalid_argument("MRFModel: node_count must be positive");
  if (label_count < 2) throw std::invalid_argument("MRFModel: label_count must be >= 2");
  if (!prior_) throw std::invalid_argument("MRFModel: null prior");
}

double& MRFModel::unary(int p, int label) {
  if (p < 0 || p >= node_count_ || label < 0 || label >= label_count_)
    throw std::out_of_range("MRFModel::unary: index out of range");
  return unary_[static_cast<std::size_t>(p) * static_cast<std::size_t>(label_count_) +
                static_cast<std::size_t>(label)];
}

double MRFModel::unary(int p, int label) const {
  return const_cast<MRFModel*>(this)->unary(p, label);
}

void MRFModel::add_edge(int p, int q, double gamma) {
  if (p < 0 || p >= node_count_ || q < 0 || q >= node_count_)
    throw std::invalid_argument("MRFModel::add_edge: invalid node id");
  if (p == q) throw std::invalid_argument("MRFModel::add_edge: p == q");
  if (gamma < 0.0) throw std::invalid_argument("MRFModel::add_edge: negative gamma");
  edges_.push_back({p, q, gamma});
}

namespace {

void check_labeling(const MRFModel& model, const Labeling& x) {
  if (static_cast<int>(x.size()) != model.node_count())
    throw std::invalid_argument("labeling size does not match node count");
  for (int label : x)
    if (label < 0 || label >= model.label_count())
      throw std::invalid_argument("labeling contains an out-of-range label");
}

}  // namespace

double energy(const MRFModel& model, const Labeling& x) {
  check_labeling(model, x);
  double total = 0.0;
  for (int p = 0; p < model.node_count(); ++p) total += model.unary(p, x[static_cast<std::size_t>(p)]);
  const PriorDecomposition& prior = model.prior();
  for (const MRFEdge& e : model.edges()) {
    int dz = std::abs(x[static_cast<std::size_t>(e.p)] - x[static_cast<std::size_t>(e.q)]);
    total += e.gamma * prior.theta(static_cast<double>(dz));
  }
  return total;
}

double surrogate_energy(const MRFModel& model, const Labeling& x, const EdgeWeights& w) {
  check_labeling(model, x);
  if (w.size() != model.edges().size())
    throw std::invalid_argument("edge weights do not match edge count");
  double total = 0.0;
  for (int p = 0; p < model.node_count(); ++p) total += model.unary(p, x[static_cast<std::size_t>(p)]);
  const PriorDecomposition& prior = model.prior();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const MRFEdge& e = model.edges()[i];
    int dz = std::abs(x[static_cast<std::size_t>(e.p)] - x[static_cast<std::size_t>(e.q)]);
    total += w[i] * e.gamma * prior.g(static_cast<double>(dz));
  }
  return total;
}

std::vector<std::pair<int, int>> grid_edges(int width, int height, int connectivity) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("grid_edges: empty grid");
  if (connectivity != 4 && connectivity != 8)
    throw std::invalid_argument("grid_edges: connectivity must be 4 or 8");
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      int p = r * width + c;
      if (c + 1 < width) edges.emplace_back(p, p + 1);
      if (r + 1 < height) edges.emplace_back(p, p + width);
      if (connectivity == 8) {
        if (r + 1 < height && c + 1 < width) edges.emplace_back(p, p + width + 1);
        if (r + 1 < height && c > 0) edges.emplace_back(p, p + width - 1);
      }
    }
  }
  return edges;
}

MRFModel build_grid(int width, int height, int connectivity, int label_count,
                    const std::vector<double>& unary,
                    const std::function<double(int, int)>& gamma,
                    std::shared_ptr<const PriorDecomposition> prior) {
  int n = width * height;
  if (static_cast<std::size_t>(n) * static_cast<std::size_t>(label_count) != unary.size())
    throw std::invalid_argument("build_grid: unary table size mismatch");
  MRFModel model(n, label_count, std::move(prior));
  for (int p = 0; p < n; ++p)
    for (int l = 0; l < label_count; ++l)
      model.unary(p, l) = unary[static_cast<std::size_t>(p) * static_cast<std::size_t>(label_count) +
                                static_cast<std::size_t>(l)];
  for (auto [p, q] : grid_edges(width, height, connectivity)) model.add_edge(p, q, gamma(p, q));
  return model;
}

MRFModel build_grid(int width, int height, int connectivity, int label_count,
                    const std::vector<double>& unary, double uniform_gamma,
                    std::shared_ptr<const PriorDecomposition> prior) {
  return build_grid(width, height, connectivity, label_count, unary,
                    [uniform_gamma](int, int) { return uniform_gamma; }, std::move(prior));
}

}  // namespace irgc
