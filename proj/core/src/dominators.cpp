#include "vcc/dominators.hpp"

#include <string>

#include "vcc/error.hpp"

namespace vcc {

bool DominatorTree::dominates(Vertex a, Vertex b) const noexcept {
  for (Vertex x = b; x >= 0; x = idom[x]) {
    if (x == a) return true;
  }
  return false;
}

namespace {

// Semidominator bookkeeping in DFS-preorder numbering.
class LengauerTarjan {
 public:
  LengauerTarjan(const DiGraph& g, Vertex root) : g_(g), n_(static_cast<Vertex>(g.vertex_count())) {
    pre_.assign(n_, -1);
    parent_.assign(n_, -1);
    semi_.assign(n_, 0);
    label_.assign(n_, 0);
    ancestor_.assign(n_, -1);
    idom_.assign(n_, -1);
    bucket_.assign(n_, {});
    number(root);
  }

  std::vector<Vertex> run() {
    if (static_cast<Vertex>(order_.size()) != n_) {
      throw Error(Errc::NotAFlowgraph, std::to_string(n_ - static_cast<Vertex>(order_.size())) +
                                           " vertices unreachable from root " +
                                           std::to_string(order_.front()));
    }
    for (Vertex v = 0; v < n_; ++v) {
      semi_[v] = pre_[v];
      label_[v] = v;
    }
    for (Vertex i = n_ - 1; i >= 1; --i) {
      const Vertex w = order_[i];
      for (Vertex v : g_.in(w)) {
        const Vertex u = eval(v);
        if (semi_[u] < semi_[w]) semi_[w] = semi_[u];
      }
      bucket_[order_[semi_[w]]].push_back(w);
      const Vertex p = parent_[w];
      ancestor_[w] = p;
      for (Vertex v : bucket_[p]) {
        const Vertex u = eval(v);
        idom_[v] = semi_[u] < semi_[v] ? u : p;
      }
      bucket_[p].clear();
    }
    for (Vertex i = 1; i < n_; ++i) {
      const Vertex w = order_[i];
      if (idom_[w] != order_[semi_[w]]) idom_[w] = idom_[idom_[w]];
    }
    return std::move(idom_);
  }

 private:
  void number(Vertex root) {
    std::vector<std::pair<Vertex, std::size_t>> frames;
    pre_[root] = 0;
    order_.push_back(root);
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto succ = g_.out(v);
      if (pos == succ.size()) {
        frames.pop_back();
        continue;
      }
      const Vertex w = succ[pos++];
      if (pre_[w] >= 0) continue;
      pre_[w] = static_cast<int>(order_.size());
      order_.push_back(w);
      parent_[w] = v;
      frames.emplace_back(w, 0);
    }
  }

  Vertex eval(Vertex v) {
    if (ancestor_[v] < 0) return v;
    compress(v);
    return label_[v];
  }

  void compress(Vertex v) {
    path_.clear();
    for (Vertex x = v; ancestor_[ancestor_[x]] >= 0; x = ancestor_[x]) path_.push_back(x);
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      const Vertex x = *it;
      const Vertex a = ancestor_[x];
      if (semi_[label_[a]] < semi_[label_[x]]) label_[x] = label_[a];
      ancestor_[x] = ancestor_[a];
    }
  }

  const DiGraph& g_;
  Vertex n_;
  std::vector<int> pre_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<int> semi_;
  std::vector<Vertex> label_;
  std::vector<Vertex> ancestor_;
  std::vector<Vertex> idom_;
  std::vector<std::vector<Vertex>> bucket_;
  std::vector<Vertex> path_;
};

}  // namespace

DominatorTree dominator_tree(const DiGraph& g, Vertex root) {
  const std::size_t n = g.vertex_count();
  if (root < 0 || static_cast<std::size_t>(root) >= n) {
    throw Error(Errc::VertexOutOfRange, "root " + std::to_string(root));
  }
  DominatorTree t;
  t.root = root;
  t.idom = LengauerTarjan(g, root).run();
  t.children.assign(n, {});
  for (Vertex w = 0; w < static_cast<Vertex>(n); ++w) {
    if (t.idom[w] >= 0) t.children[t.idom[w]].push_back(w);
  }
  return t;
}

VertexSet nontrivial_dominators(const DominatorTree& t) {
  VertexSet d;
  for (Vertex w = 0; w < static_cast<Vertex>(t.size()); ++w) {
    if (w != t.root && !t.children[w].empty()) d.push_back(w);
  }
  return d;
}

const VertexSet& root_children(const DominatorTree& t) { return t.children[t.root]; }

const VertexSet& tree_children(const DominatorTree& t, Vertex w) {
  if (w < 0 || static_cast<std::size_t>(w) >= t.size()) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(w));
  }
  return t.children[w];
}

}  // namespace vcc
