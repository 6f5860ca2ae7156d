#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "signcert/polynomial.hpp"

namespace signcert {

/// f = f_const + f_a + sum_{alpha in A} (-f_alpha)(1 - x^alpha) + sum_j f_j x_j,
/// where A collects the negative nonlinear terms and f_a = sum_A f_alpha.
struct ReducedForm {
  int n_vars = 0;
  Rational f_const;
  Rational f_a;
  std::map<Support, Rational> neg_terms;
  std::map<int, Rational> lin_terms;
  /// N_f = {j : f_j <= 0}, ascending.
  std::vector<int> fixed_ones;
};

/// Arc capacity; infinite arcs carry a tag instead of a big-M.
struct Capacity {
  bool infinite = false;
  Rational value;

  static Capacity inf() { return {true, Rational(0)}; }
  static Capacity of(const Rational& v) { return {false, v}; }
};

struct FlowArc {
  int from;
  int to;
  Capacity cap;
};

/// Directed network. Node 0 is the source and node 1 the sink. Networks built
/// from a ReducedForm place the A-nodes at 2..2+|A|-1 and x_j at var_node(j).
struct FlowNetwork {
  int n_nodes = 2;
  std::vector<FlowArc> arcs;
  std::vector<std::string> names;

  std::vector<Support> a_nodes;
  int n_vars = 0;

  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  int alpha_node(std::size_t k) const { return 2 + static_cast<int>(k); }
  int var_node(int j) const { return 2 + static_cast<int>(a_nodes.size()) + j - 1; }

  /// Graphviz rendering; arcs are labelled with their capacity or "inf".
  std::string to_dot() const;
};

struct CutResult {
  Rational value;
  /// 1 on the source side (residual reachability from the source), 0 otherwise.
  std::vector<std::uint8_t> labels;
  /// Flow per arc, parallel to FlowNetwork::arcs.
  std::vector<Rational> flows;
};

/// Throws std::invalid_argument if f has a positive nonlinear coefficient.
ReducedForm reduce(const Polynomial& f);

FlowNetwork build_network(const ReducedForm& rf);

/// Exact max flow by highest-label push-relabel with the gap heuristic.
/// Arcs leaving the source must be finite; capacities must be nonnegative.
CutResult max_flow_min_cut(const FlowNetwork& net);

/// Capacity of the cut given by labels; infinite if an infinite arc crosses it.
Capacity cut_capacity(const FlowNetwork& net, const std::vector<std::uint8_t>& labels);

/// Exact minimum of an NNS polynomial; f(x) == value for the returned x.
MinResult minimize_nns(const Polynomial& f);

/// A point with f(x) < 0, or nothing if f is binary non-negative.
std::optional<BinaryPoint> separate(const Polynomial& f);

}  // namespace signcert
