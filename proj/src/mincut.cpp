#include "signcert/mincut.hpp"

#include <sstream>
#include <stdexcept>

namespace signcert {

ReducedForm reduce(const Polynomial& f) {
  ReducedForm rf;
  rf.n_vars = f.n_vars();
  rf.f_const = f.constant();
  rf.f_a = 0;
  for (const auto& [alpha, c] : f.terms()) {
    if (!alpha.is_nonlinear()) continue;
    if (c > 0) throw std::invalid_argument("reduce: positive nonlinear term {" + alpha.to_string() + "}, f is not NNS");
    rf.neg_terms.emplace(alpha, c);
    rf.f_a += c;
  }
  for (int j = 1; j <= rf.n_vars; ++j) {
    Rational fj = f.linear(j);
    if (fj <= 0) rf.fixed_ones.push_back(j);
    if (fj != 0) rf.lin_terms.emplace(j, fj);
  }
  return rf;
}

FlowNetwork build_network(const ReducedForm& rf) {
  FlowNetwork net;
  net.n_vars = rf.n_vars;
  for (const auto& [alpha, c] : rf.neg_terms) net.a_nodes.push_back(alpha);
  net.n_nodes = 2 + static_cast<int>(net.a_nodes.size()) + rf.n_vars;

  net.names.assign(net.n_nodes, "");
  net.names[FlowNetwork::kSource] = "s";
  net.names[FlowNetwork::kSink] = "t";
  for (std::size_t k = 0; k < net.a_nodes.size(); ++k) {
    std::string name = "a";
    for (int j : net.a_nodes[k]) name += "_" + std::to_string(j);
    net.names[net.alpha_node(k)] = name;
  }
  for (int j = 1; j <= rf.n_vars; ++j) net.names[net.var_node(j)] = "x_" + std::to_string(j);

  std::size_t k = 0;
  for (const auto& [alpha, c] : rf.neg_terms) {
    net.arcs.push_back({FlowNetwork::kSource, net.alpha_node(k), Capacity::of(-c)});
    for (int j : alpha) net.arcs.push_back({net.alpha_node(k), net.var_node(j), Capacity::inf()});
    ++k;
  }
  for (int j = 1; j <= rf.n_vars; ++j) {
    auto it = rf.lin_terms.find(j);
    Rational cap = (it != rf.lin_terms.end() && it->second > 0) ? it->second : Rational(0);
    net.arcs.push_back({net.var_node(j), FlowNetwork::kSink, Capacity::of(cap)});
  }
  return net;
}

std::string FlowNetwork::to_dot() const {
  std::ostringstream os;
  auto name = [&](int v) {
    return v < static_cast<int>(names.size()) && !names[v].empty() ? names[v] : "n" + std::to_string(v);
  };
  os << "digraph G {\n  rankdir=LR;\n";
  for (const auto& a : arcs) {
    os << "  " << name(a.from) << " -> " << name(a.to) << " [label=\""
       << (a.cap.infinite ? std::string("inf") : signcert::to_string(a.cap.value)) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Capacity cut_capacity(const FlowNetwork& net, const std::vector<std::uint8_t>& labels) {
  Rational total = 0;
  for (const auto& a : net.arcs) {
    if (labels[a.from] && !labels[a.to]) {
      if (a.cap.infinite) return Capacity::inf();
      total += a.cap.value;
    }
  }
  return Capacity::of(total);
}

MinResult minimize_nns(const Polynomial& f) {
  ReducedForm rf = reduce(f);
  FlowNetwork net = build_network(rf);
  CutResult cut = max_flow_min_cut(net);

  Rational value = rf.f_const + rf.f_a + cut.value;
  for (int j : rf.fixed_ones) value += f.linear(j);

  BinaryPoint x(rf.n_vars, 0);
  for (int j = 1; j <= rf.n_vars; ++j) x[j - 1] = cut.labels[net.var_node(j)];
  for (int j : rf.fixed_ones) x[j - 1] = 1;
  return {std::move(x), value};
}

std::optional<BinaryPoint> separate(const Polynomial& f) {
  MinResult r = minimize_nns(f);
  if (r.value < 0) return std::move(r.x);
  return std::nullopt;
}

}  // namespace signcert
