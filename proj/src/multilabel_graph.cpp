#include "irgc/multilabel_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace irgc {

namespace {

constexpr int kSourceId = 0;
constexpr int kSinkId = 1;

// Second differences g''(0..L-2), validated non-negative. Tiny negative values
// from rounding are clamped to zero so they are not materialized as arcs.
std::vector<double> second_differences(const PriorDecomposition& prior, int chain_len) {
  std::vector<double> g2(static_cast<std::size_t>(chain_len), 0.0);
  for (int z = 0; z < chain_len; ++z) {
    double v = prior.second_difference(z);
    if (v < -1e-12)
      throw std::logic_error("multilabel graph: negative g'' (non-convex g)");
    g2[static_cast<std::size_t>(z)] = std::max(v, 0.0);
  }
  return g2;
}

double inter_chain_cap(int i, int j, double c, const std::vector<double>& g2) {
  if (i < j) return 0.0;
  if (i == j) return 0.5 * c * g2[0];
  return c * g2[static_cast<std::size_t>(i - j)];
}

}  // namespace

int MultiLabelGraph::chain_node(int p, int i) const {
  return 2 + p * chain_len_ + i;
}

MultiLabelGraph::MultiLabelGraph(const MRFModel& model, const EdgeWeights& w)
    : model_(&model), w_(w), chain_len_(model.label_count() - 1) {
  if (w_.size() != model.edges().size())
    throw std::invalid_argument("multilabel graph: weight count mismatch");
  for (double wi : w_)
    if (wi < 0.0) throw std::invalid_argument("multilabel graph: negative weight");

  int n = model.node_count();
  int labels = model.label_count();
  net_.add_nodes(2 + n * chain_len_);
  net_.set_terminals(kSourceId, kSinkId);

  // Horizontal arcs carry the unaries, shifted per node so capacities are
  // non-negative even for negative user costs. The shift is added back to the
  // reported value.
  for (int p = 0; p < n; ++p) {
    double lo = model.unary(p, 0);
    for (int l = 1; l < labels; ++l) lo = std::min(lo, model.unary(p, l));
    unary_shift_ += lo;
    for (int i = 0; i < labels; ++i) {
      int u = (i == 0) ? kSourceId : chain_node(p, i - 1);
      int v = (i == labels - 1) ? kSinkId : chain_node(p, i);
      net_.add_arc(u, v, model.unary(p, i) - lo, FlowNetwork::kInfiniteCap);
    }
  }

  std::vector<double> g2 = second_differences(model.prior(), chain_len_);
  for (std::size_t ei = 0; ei < model.edges().size(); ++ei) {
    const MRFEdge& e = model.edges()[ei];
    double c = w_[ei] * e.gamma;
    if (c == 0.0) continue;
    for (int i = 0; i < chain_len_; ++i) {
      for (int j = 0; j < chain_len_; ++j) {
        double fwd = inter_chain_cap(i, j, c, g2);
        double rev = inter_chain_cap(j, i, c, g2);
        if (fwd > 0.0 || rev > 0.0)
          net_.add_arc(chain_node(e.p, i), chain_node(e.q, j), fwd, rev);
      }
    }
  }
}

std::pair<Labeling, double> MultiLabelGraph::solve() {
  double flow = net_.max_flow();
  int n = model_->node_count();
  Labeling x(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) {
    int label = chain_len_;  // all chain nodes on the source side
    for (int i = 0; i < chain_len_; ++i) {
      if (net_.min_cut_side(chain_node(p, i)) == CutSide::kSink) {
        label = i;
        break;
      }
    }
    // The constraint arcs guarantee a single source-to-sink transition along
    // the chain; anything else is a construction bug.
    for (int i = label; i < chain_len_; ++i)
      if (net_.min_cut_side(chain_node(p, i)) != CutSide::kSink)
        throw std::logic_error("multilabel graph: non-monotone cut along a node chain");
    x[static_cast<std::size_t>(p)] = label;
  }

  double value = flow + unary_shift_;
  double expected = surrogate_energy(*model_, x, w_);
  double tol = 1e-6 + 1e-9 * std::abs(expected);
  if (std::abs(value - expected) > tol)
    throw std::logic_error("multilabel graph: flow value does not match surrogate energy");
  return {std::move(x), value};
}

std::int64_t MultiLabelGraph::estimate_memory(const MRFModel& model) {
  int labels = model.label_count();
  int chain_len = labels - 1;
  std::vector<double> g2 = second_differences(model.prior(), chain_len);
  // Horizontal plus constraint arcs: 2L per node.
  std::int64_t count = 2LL * labels * model.node_count();
  // Inter-chain arc pairs: one pair per (i, j) with g''(|i - j|) != 0.
  std::int64_t pairs_per_edge = 0;
  for (int i = 0; i < chain_len; ++i)
    for (int j = 0; j < chain_len; ++j)
      if (g2[static_cast<std::size_t>(std::abs(i - j))] > 0.0) ++pairs_per_edge;
  for (const MRFEdge& e : model.edges())
    if (e.gamma != 0.0) count += 2 * pairs_per_edge;
  return count;
}

}  // namespace irgc
