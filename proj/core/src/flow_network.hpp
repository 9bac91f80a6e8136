#pragma once

#include <algorithm>
#include <limits>
#include <vector>

namespace vcc::detail {

/// Dinic max-flow on integer capacities. Arc ids returned by add_arc are
/// stable; the paired reverse arc is id ^ 1.
class FlowNetwork {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  explicit FlowNetwork(int nodes) : head_(nodes, -1), level_(nodes), cursor_(nodes) {}

  int add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
    return static_cast<int>(arcs_.size()) - 2;
  }

  /// Pushes flow until none remains or `limit` is reached.
  int max_flow(int source, int sink, int limit = kInfinite) {
    int total = 0;
    while (total < limit && build_levels(source, sink)) {
      std::copy(head_.begin(), head_.end(), cursor_.begin());
      while (total < limit) {
        const int pushed = push(source, sink, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  [[nodiscard]] int flow_on(int arc) const { return arcs_[arc].initial - arcs_[arc].cap; }

  /// Nodes reachable from `source` through arcs with residual capacity.
  [[nodiscard]] std::vector<char> residual_reach(int source) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> queue{source};
    seen[source] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int a = head_[queue[i]]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int initial;
    int next;
  };

  bool build_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{source};
    level_[source] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int a = head_[queue[i]]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[queue[i]] + 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  // Iterative blocking-flow DFS along the level graph.
  int push(int source, int sink, int limit) {
    std::vector<int> path;
    int node = source;
    while (true) {
      if (node == sink) {
        int amount = limit;
        for (int a : path) amount = std::min(amount, arcs_[a].cap);
        for (int a : path) {
          arcs_[a].cap -= amount;
          arcs_[a ^ 1].cap += amount;
        }
        return amount;
      }
      int& a = cursor_[node];
      while (a >= 0 && !(arcs_[a].cap > 0 && level_[arcs_[a].to] == level_[node] + 1)) {
        a = arcs_[a].next;
      }
      if (a >= 0) {
        path.push_back(a);
        node = arcs_[a].to;
        continue;
      }
      if (path.empty()) return 0;
      level_[node] = -1;
      node = arcs_[path.back() ^ 1].to;
      path.pop_back();
      cursor_[node] = arcs_[cursor_[node]].next;
    }
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace vcc::detail
