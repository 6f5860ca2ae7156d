#include "signcert/maxcut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace signcert {

Graph parse_rudy(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (auto hash = out.find('#'); hash != std::string::npos) out.erase(hash);
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw std::invalid_argument("rudy: missing header");
  Graph g;
  long m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> g.n_nodes >> m) || (hs >> extra) || g.n_nodes < 0 || m < 0) {
      throw std::invalid_argument("rudy: malformed header '" + line + "'");
    }
  }
  std::set<std::pair<int, int>> seen;
  for (long e = 0; e < m; ++e) {
    if (!next_line(line)) throw std::invalid_argument("rudy: expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    std::istringstream ls(line);
    int i = 0, j = 0;
    std::string w, extra;
    if (!(ls >> i >> j >> w) || (ls >> extra)) throw std::invalid_argument("rudy: malformed edge line '" + line + "'");
    if (i < 1 || j < 1 || i > g.n_nodes || j > g.n_nodes) {
      throw std::invalid_argument("rudy: edge (" + std::to_string(i) + "," + std::to_string(j) + ") index out of range");
    }
    if (i == j) throw std::invalid_argument("rudy: self loop at node " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (!seen.emplace(i, j).second) {
      throw std::invalid_argument("rudy: duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    g.edges.push_back({i, j, parse_rational(w)});
  }
  if (next_line(line)) throw std::invalid_argument("rudy: trailing data after " + std::to_string(m) + " edges");
  return g;
}

std::string serialize_rudy(const Graph& g) {
  std::ostringstream os;
  os << g.n_nodes << ' ' << g.edges.size() << '\n';
  for (const auto& e : g.edges) os << e.i << ' ' << e.j << ' ' << to_string(e.w) << '\n';
  return os.str();
}

Polynomial maxcut_to_bpo(const Graph& g) {
  Polynomial f(g.n_nodes);
  for (const auto& e : g.edges) {
    f.add(Support{e.i}, -e.w);
    f.add(Support{e.j}, -e.w);
    f.add(Support{e.i, e.j}, 2 * e.w);
  }
  return f;
}

Rational cut_value(const Graph& g, const BinaryPoint& x) {
  Rational v = 0;
  for (const auto& e : g.edges) {
    if (x.at(e.i - 1) != x.at(e.j - 1)) v += e.w;
  }
  return v;
}

MaxCutResult maxcut_brute_force(const Graph& g, int cap) {
  const int n = g.n_nodes;
  // Integer weights after scaling by the common denominator.
  mpz_class scale = 1;
  for (const auto& e : g.edges) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.w.get_den_mpz_t());
  mpz_class total = 0;
  std::vector<long> w;
  for (const auto& e : g.edges) {
    mpz_class z = e.w.get_num() * (scale / e.w.get_den());
    total += abs(z);
    w.push_back(z.get_si());
  }
  if (total >= (mpz_class(1) << 62)) throw std::length_error("maxcut_brute_force: weights too large");

  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges) parent[find(e.i)] = find(e.j);

  std::vector<std::vector<std::pair<int, long>>> adj(n + 1);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    adj[g.edges[k].i].emplace_back(g.edges[k].j, w[k]);
    adj[g.edges[k].j].emplace_back(g.edges[k].i, w[k]);
  }

  std::map<int, std::vector<int>> components;
  for (int v = 1; v <= n; ++v) components[find(v)].push_back(v);

  BinaryPoint x(n, 0);
  long best_total = 0;
  for (const auto& [root, nodes] : components) {
    const int c = static_cast<int>(nodes.size());
    if (c == 1) continue;
    if (c > cap) throw std::length_error("maxcut_brute_force: component of " + std::to_string(c) + " nodes exceeds cap");
    // The first node stays on side 0; the others follow a Gray code.
    BinaryPoint local(n, 0);
    long value = 0, best = 0;
    std::uint64_t best_code = 0, code = 0;
    const std::uint64_t steps = std::uint64_t{1} << (c - 1);
    for (std::uint64_t s = 1; s < steps; ++s) {
      const int bit = __builtin_ctzll(s);
      const int v = nodes[bit + 1];
      code ^= std::uint64_t{1} << bit;
      long delta = 0;
      for (const auto& [u, wt] : adj[v]) delta += local[u - 1] == local[v - 1] ? wt : -wt;
      local[v - 1] ^= 1;
      value += delta;
      if (value > best) {
        best = value;
        best_code = code;
      }
    }
    for (int b = 0; b + 1 < c; ++b) x[nodes[b + 1] - 1] = (best_code >> b) & 1U;
    best_total += best;
  }
  Rational value(mpz_class(best_total), scale);
  value.canonicalize();
  return {value, std::move(x)};
}

Graph random_pm1_graph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(density), positive(0.5);
  Graph g;
  g.n_nodes = n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (present(rng)) g.edges.push_back({i, j, Rational(positive(rng) ? 1 : -1)});
    }
  }
  return g;
}

}  // namespace signcert
