#include "irgc/maxflow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace irgc {

int FlowNetwork::add_nodes(int count) {
  if (count <= 0) throw std::invalid_argument("add_nodes: count must be positive");
  int first = node_count();
  head_.resize(head_.size() + static_cast<std::size_t>(count));
  return first;
}

void FlowNetwork::set_terminals(int source, int sink) {
  if (source < 0 || source >= node_count() || sink < 0 || sink >= node_count())
    throw std::invalid_argument("set_terminals: invalid node id");
  if (source == sink) throw std::invalid_argument("set_terminals: source == sink");
  source_ = source;
  sink_ = sink;
}

void FlowNetwork::add_arc(int u, int v, double cap, double rev_cap) {
  if (u < 0 || u >= node_count() || v < 0 || v >= node_count())
    throw std::invalid_argument("add_arc: invalid node id");
  if (u == v) throw std::invalid_argument("add_arc: self loop");
  if (cap < 0.0 || rev_cap < 0.0) throw std::invalid_argument("add_arc: negative capacity");
  int idx = static_cast<int>(arcs_.size());
  arcs_.push_back({v, cap});
  arcs_.push_back({u, rev_cap});
  arc_from_.push_back(u);
  arc_from_.push_back(v);
  head_[static_cast<std::size_t>(u)].push_back(idx);
  head_[static_cast<std::size_t>(v)].push_back(idx + 1);
}

bool FlowNetwork::bfs_levels() {
  level_.assign(head_.size(), -1);
  std::deque<int> queue;
  level_[static_cast<std::size_t>(source_)] = 0;
  queue.push_back(source_);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int ai : head_[static_cast<std::size_t>(u)]) {
      const Arc& a = arcs_[static_cast<std::size_t>(ai)];
      if (a.cap > kEps && level_[static_cast<std::size_t>(a.to)] < 0) {
        level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(u)] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink_)] >= 0;
}

double FlowNetwork::dfs_augment(int u, double limit) {
  if (u == sink_) return limit;
  for (std::size_t& it = iter_[static_cast<std::size_t>(u)];
       it < head_[static_cast<std::size_t>(u)].size(); ++it) {
    int ai = head_[static_cast<std::size_t>(u)][it];
    Arc& a = arcs_[static_cast<std::size_t>(ai)];
    if (a.cap > kEps &&
        level_[static_cast<std::size_t>(a.to)] == level_[static_cast<std::size_t>(u)] + 1) {
      double pushed = dfs_augment(a.to, std::min(limit, a.cap));
      if (pushed > 0.0) {
        a.cap -= pushed;
        arcs_[static_cast<std::size_t>(ai ^ 1)].cap += pushed;
        return pushed;
      }
    }
  }
  return 0.0;
}

double FlowNetwork::max_flow() {
  if (source_ < 0 || sink_ < 0) throw std::logic_error("max_flow: terminals not set");
  // Materialize the "infinite" capacities.
  double finite_sum = 0.0;
  for (const Arc& a : arcs_)
    if (std::isfinite(a.cap)) finite_sum += a.cap;
  double big = 1.0 + finite_sum;
  for (Arc& a : arcs_)
    if (!std::isfinite(a.cap)) a.cap = big;

  double total = 0.0;
  while (bfs_levels()) {
    iter_.assign(head_.size(), 0);
    while (true) {
      double pushed = dfs_augment(source_, std::numeric_limits<double>::max());
      if (pushed <= 0.0) break;
      total += pushed;
    }
  }
  solved_ = true;
  compute_cut_sides();
  return total;
}

void FlowNetwork::compute_cut_sides() {
  source_side_.assign(head_.size(), 0);
  std::deque<int> queue;
  source_side_[static_cast<std::size_t>(source_)] = 1;
  queue.push_back(source_);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int ai : head_[static_cast<std::size_t>(u)]) {
      const Arc& a = arcs_[static_cast<std::size_t>(ai)];
      if (a.cap > kEps && !source_side_[static_cast<std::size_t>(a.to)]) {
        source_side_[static_cast<std::size_t>(a.to)] = 1;
        queue.push_back(a.to);
      }
    }
  }
}

CutSide FlowNetwork::min_cut_side(int v) const {
  if (!solved_) throw std::logic_error("min_cut_side: called before max_flow");
  if (v < 0 || v >= node_count()) throw std::invalid_argument("min_cut_side: invalid node id");
  return source_side_[static_cast<std::size_t>(v)] ? CutSide::kSource : CutSide::kSink;
}

std::vector<FlowNetwork::ArcState> FlowNetwork::arc_states() const {
  std::vector<ArcState> out;
  out.reserve(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    out.push_back({arc_from_[i], arcs_[i].to, arcs_[i].cap});
  return out;
}

}  // namespace irgc
