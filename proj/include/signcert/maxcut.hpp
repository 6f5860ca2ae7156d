#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signcert/polynomial.hpp"

namespace signcert {

struct WeightedEdge {
  int i;
  int j;
  Rational w;
};

/// Undirected weighted graph on nodes 1..n_nodes with i < j on every edge.
struct Graph {
  int n_nodes = 0;
  std::vector<WeightedEdge> edges;
};

/// rudy format: "n m" then m lines "i j w". Edges given as j i are stored as
/// i j. Throws std::invalid_argument on malformed input, out-of-range
/// indices, self loops or duplicate edges.
Graph parse_rudy(const std::string& text);
std::string serialize_rudy(const Graph& g);

/// f(x) = -sum w_ij (x_i + x_j - 2 x_i x_j), so min f = -maxcut.
Polynomial maxcut_to_bpo(const Graph& g);

Rational cut_value(const Graph& g, const BinaryPoint& x);

struct MaxCutResult {
  Rational value;
  BinaryPoint x;
};

/// Exact maximum cut by Gray-code enumeration per connected component.
/// Throws std::length_error if a component exceeds cap nodes.
MaxCutResult maxcut_brute_force(const Graph& g, int cap = 32);

/// Erdos-Renyi graph with each pair present with probability density and
/// weight drawn uniformly from {-1, +1}.
Graph random_pm1_graph(int n, double density, std::uint64_t seed);

}  // namespace signcert
