#ifndef IRGC_MAXFLOW_HPP
#define IRGC_MAXFLOW_HPP

#include <cstddef>
#include <limits>
#include <vector>

namespace irgc {

enum class CutSide { kSource, kSink };

// Directed s-t flow network with real-valued capacities. Arcs are stored in
// pairs, so add_arc(u, v, cap, rev_cap) creates both u->v and v->u in one call.
// Capacities equal to kInfiniteCap are replaced at solve time by
// 1 + sum of all finite capacities, which is large enough that such arcs are
// never saturated by a minimum cut.
class FlowNetwork {
 public:
  static constexpr double kInfiniteCap = std::numeric_limits<double>::infinity();
  // Residuals below this are treated as saturated.
  static constexpr double kEps = 1e-9;

  struct ArcState {
    int from;
    int to;
    double residual;
  };

  // Appends `count` nodes with contiguous ids; returns the first new id.
  int add_nodes(int count);

  void set_terminals(int source, int sink);

  void add_arc(int u, int v, double cap, double rev_cap);

  // Computes the maximum s-t flow (Dinic). After this call min_cut_side()
  // reports the canonical minimum cut: SOURCE side = nodes reachable from the
  // source in the residual graph.
  double max_flow();

  CutSide min_cut_side(int v) const;

  int node_count() const { return static_cast<int>(head_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }
  bool solved() const { return solved_; }

  // Residual state of every directed arc, in insertion order (forward arc of
  // each pair first). Exposed for flow-conservation checks in tests.
  std::vector<ArcState> arc_states() const;

 private:
  struct Arc {
    int to;
    double cap;  // residual capacity
  };

  bool bfs_levels();
  double dfs_augment(int u, double limit);
  void compute_cut_sides();

  std::vector<Arc> arcs_;               // pair i has arcs 2i and 2i+1
  std::vector<int> arc_from_;           // tail of each directed arc
  std::vector<std::vector<int>> head_;  // adjacency: node -> arc indices
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
  std::vector<char> source_side_;
  int source_ = -1;
  int sink_ = -1;
  bool solved_ = false;
};

}  // namespace irgc

#endif  // IRGC_MAXFLOW_HPP
