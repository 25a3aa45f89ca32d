#pragma once

// Test-side oracle: the smallest total grid draw any transfer schedule could
// reach for a single hour, computed by max flow (Edmonds-Karp) on the
// donor/recipient bipartite graph. Donors cap at their surplus, recipients
// at deficit/alpha in sent units, first-tier edges only.

#include <algorithm>
#include <deque>
#include <vector>

#include "greencell/geometry.hpp"

namespace greencell_test {

class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1) {}

  void add_edge(int u, int v, double cap) {
    edges_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, head_[v], 0.0});
    head_[v] = static_cast<int>(edges_.size()) - 1;
  }

  double max_flow(int s, int t) {
    double total = 0.0;
    for (;;) {
      std::vector<int> via(head_.size(), -1);
      std::deque<int> queue{s};
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        int u = queue.front();
        queue.pop_front();
        for (int e = head_[u]; e != -1; e = edges_[e].next) {
          if (edges_[e].cap > 1e-12 && via[edges_[e].to] == -1) {
            via[edges_[e].to] = e;
            queue.push_back(edges_[e].to);
          }
        }
      }
      if (via[t] == -1) break;
      double push = std::numeric_limits<double>::infinity();
      for (int v = t; v != s;) {
        int e = via[v];
        push = std::min(push, edges_[e].cap);
        v = edges_[e ^ 1].to;
      }
      for (int v = t; v != s;) {
        int e = via[v];
        edges_[e].cap -= push;
        edges_[e ^ 1].cap += push;
        v = edges_[e ^ 1].to;
      }
      total += push;
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    int next;
    double cap;
  };
  std::vector<int> head_;
  std::vector<Edge> edges_;
};

inline double min_grid_oracle(const greencell::Layout& layout,
                              const std::vector<double>& available,
                              const std::vector<double>& demand, double alpha) {
  const int n = layout.site_count();
  const int source = 2 * n, sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  double total_deficit = 0.0;
  for (int i = 0; i < n; ++i) {
    double surplus = std::max(0.0, available[i] - demand[i]);
    double deficit = std::max(0.0, demand[i] - available[i]);
    total_deficit += deficit;
    if (surplus > 0.0) net.add_edge(source, i, surplus);
    if (deficit > 0.0 && alpha > 0.0) net.add_edge(n + i, sink, deficit / alpha);
    for (int m : layout.first_tier_neighbors(i))
      if (deficit > 0.0) net.add_edge(m, n + i, std::numeric_limits<double>::infinity());
  }
  if (alpha <= 0.0) return total_deficit;
  double sent = net.max_flow(source, sink);
  return total_deficit - alpha * sent;
}

}  // namespace greencell_test
