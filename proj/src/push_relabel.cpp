#include <algorithm>
#include <stdexcept>
#include <vector>

#include "signcert/mincut.hpp"

namespace signcert {

namespace {

struct Edge {
  int to;
  int rev;
  bool infinite;
  Rational residual;
  int arc;  // index into FlowNetwork::arcs for forward edges, -1 for reverse
};

class PushRelabel {
 public:
  explicit PushRelabel(const FlowNetwork& net) : n_(net.n_nodes), adj_(n_), excess_(n_), height_(n_), current_(n_) {
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
      const FlowArc& a = net.arcs[i];
      if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_) throw std::out_of_range("arc endpoint out of range");
      if (!a.cap.infinite && a.cap.value < 0) throw std::invalid_argument("negative arc capacity");
      if (a.from == FlowNetwork::kSource && a.cap.infinite) {
        throw std::invalid_argument("arcs leaving the source must be finite");
      }
      const int fi = static_cast<int>(adj_[a.from].size());
      const int ri = static_cast<int>(adj_[a.to].size()) + (a.from == a.to ? 1 : 0);
      adj_[a.from].push_back({a.to, ri, a.cap.infinite, a.cap.infinite ? Rational(0) : a.cap.value, static_cast<int>(i)});
      adj_[a.to].push_back({a.from, fi, false, Rational(0), -1});
    }
  }

  void run() {
    const int s = FlowNetwork::kSource;
    const int t = FlowNetwork::kSink;
    buckets_.assign(2 * n_ + 1, {});
    count_.assign(n_ + 1, 0);
    height_[s] = n_;
    for (int v = 0; v < n_; ++v) {
      if (v != s) ++count_[0];
    }
    for (Edge& e : adj_[s]) {
      if (e.residual > 0) {
        Rational amount = e.residual;
        push(s, e, amount);
      }
    }
    while (highest_ >= 0) {
      if (buckets_[highest_].empty()) {
        --highest_;
        continue;
      }
      int u = buckets_[highest_].back();
      buckets_[highest_].pop_back();
      if (u == s || u == t || excess_[u] <= 0) continue;
      discharge(u);
    }
  }

  CutResult result(const FlowNetwork& net) const {
    CutResult r;
    r.value = excess_[FlowNetwork::kSink];
    r.flows.assign(net.arcs.size(), Rational(0));
    for (int u = 0; u < n_; ++u) {
      for (const Edge& e : adj_[u]) {
        if (e.arc >= 0) r.flows[e.arc] = adj_[e.to][e.rev].residual;
      }
    }
    r.labels.assign(n_, 0);
    std::vector<int> stack{FlowNetwork::kSource};
    r.labels[FlowNetwork::kSource] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const Edge& e : adj_[u]) {
        if ((e.infinite || e.residual > 0) && !r.labels[e.to]) {
          r.labels[e.to] = 1;
          stack.push_back(e.to);
        }
      }
    }
    return r;
  }

 private:
  void activate(int v) {
    if (v == FlowNetwork::kSource || v == FlowNetwork::kSink) return;
    buckets_[height_[v]].push_back(v);
    highest_ = std::max(highest_, height_[v]);
  }

  void push(int u, Edge& e, const Rational& amount) {
    const bool was_inactive = excess_[e.to] <= 0;
    if (!e.infinite) e.residual -= amount;
    adj_[e.to][e.rev].residual += amount;
    excess_[u] -= amount;
    excess_[e.to] += amount;
    if (was_inactive && excess_[e.to] > 0) activate(e.to);
  }

  void discharge(int u) {
    while (excess_[u] > 0) {
      auto& edges = adj_[u];
      if (current_[u] == edges.size()) {
        relabel(u);
        if (height_[u] >= 2 * n_) return;
        current_[u] = 0;
        continue;
      }
      Edge& e = edges[current_[u]];
      if ((e.infinite || e.residual > 0) && height_[u] == height_[e.to] + 1) {
        Rational amount = e.infinite ? excess_[u] : std::min(excess_[u], e.residual);
        push(u, e, amount);
      } else {
        ++current_[u];
      }
    }
  }

  void relabel(int u) {
    const int old = height_[u];
    int best = 2 * n_;
    for (const Edge& e : adj_[u]) {
      if (e.infinite || e.residual > 0) best = std::min(best, height_[e.to] + 1);
    }
    set_height(u, best);
    if (old < n_ && count_[old] == 0) {
      for (int v = 0; v < n_; ++v) {
        if (v != FlowNetwork::kSource && height_[v] > old && height_[v] < n_) {
          set_height(v, n_);
          if (excess_[v] > 0 && v != u) activate(v);
        }
      }
    }
  }

  void set_height(int v, int h) {
    if (height_[v] < n_) --count_[height_[v]];
    height_[v] = h;
    current_[v] = 0;
    if (h < n_) ++count_[h];
  }

  int n_;
  std::vector<std::vector<Edge>> adj_;
  std::vector<Rational> excess_;
  std::vector<int> height_;
  std::vector<std::size_t> current_;
  std::vector<std::vector<int>> buckets_;
  std::vector<int> count_;
  int highest_ = -1;
};

}  // namespace

CutResult max_flow_min_cut(const FlowNetwork& net) {
  PushRelabel pr(net);
  pr.run();
  return pr.result(net);
}

}  // namespace signcert
