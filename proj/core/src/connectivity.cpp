#include "vcc/connectivity.hpp"

#include <algorithm>
#include <numeric>

#include "vcc/error.hpp"

namespace vcc {

namespace {

void sort_components(SccPartition& p) {
  for (auto& c : p.components) std::sort(c.begin(), c.end());
  std::vector<std::size_t> order(p.components.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return p.components[a] < p.components[b]; });
  std::vector<VertexSet> sorted;
  sorted.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex v : p.components[order[i]]) p.component_of[v] = static_cast<int>(i);
    sorted.push_back(std::move(p.components[order[i]]));
  }
  p.components = std::move(sorted);
}

// Iterative Tarjan. Each call frame is (vertex, next out-edge position).
SccPartition tarjan(const DiGraph& g, Vertex excluded) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  SccPartition p;
  p.component_of.assign(n, -1);

  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> frames;
  int next_index = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (root == excluded || index[root] >= 0) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto succ = g.out(v);
      if (pos < succ.size()) {
        const Vertex w = succ[pos++];
        if (w == excluded) continue;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        VertexSet comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          p.component_of[w] = static_cast<int>(p.components.size());
          comp.push_back(w);
        } while (w != done);
        p.components.push_back(std::move(comp));
      }
    }
  }
  sort_components(p);
  return p;
}

}  // namespace

SccPartition strongly_connected_components(const DiGraph& g) { return tarjan(g, -1); }

SccPartition strongly_connected_components(const DiGraph& g, Vertex excluded) {
  if (excluded < 0 || static_cast<std::size_t>(excluded) >= g.vertex_count()) {
    throw Error(Errc::VertexOutOfRange, "excluded vertex " + std::to_string(excluded));
  }
  return tarjan(g, excluded);
}

bool is_strongly_connected(const DiGraph& g) {
  return g.vertex_count() >= 1 && strongly_connected_components(g).count() == 1;
}

// Hopcroft-Tarjan with an explicit edge stack; frames carry the tree edge
// they were entered by so the parent edge is skipped exactly once.
std::vector<VertexSet> undirected_biconnected_components(const UndirectedGraph& u) {
  const auto n = static_cast<Vertex>(u.vertex_count());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> blocks;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t pos;
  };
  std::vector<Frame> frames;
  int timer = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    frames.push_back({root, -1, 0});

    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto nbrs = u.neighbors(f.v);
      if (f.pos < nbrs.size()) {
        const Vertex w = nbrs[f.pos++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex child = f.v;
      frames.pop_back();
      if (frames.empty()) break;
      const Vertex parent = frames.back().v;
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        VertexSet block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == Edge{parent, child}) break;
        }
        canonicalize(block);
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace vcc
