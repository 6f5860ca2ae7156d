#include <json.hpp>
#include <stdexcept>

#include "signcert/lp_relax.hpp"
#include "signcert/mincut.hpp"

namespace signcert {

RelaxationCertificate extract_certificate(const Relaxation& r, const LpSolution& sol, bool recheck) {
  if (sol.status != LpStatus::kOptimal) {
    throw std::runtime_error("cannot extract a certificate from a " + to_string(sol.status) + " solution");
  }
  const auto& v = sol.values;
  const int n = r.f.n_vars();

  RelaxationCertificate cert;
  cert.lambda = v.at(r.lambda);
  cert.g = Polynomial(n);
  for (const auto& [alpha, id] : r.g) cert.g.set(alpha, v.at(id));

  for (const auto& blk : r.blocks) {
    RelaxationCertificate::Block b;
    SignedSupport::SignMap theta = blk.template_support.s1.signs();
    for (const auto& [alpha, s] : blk.template_support.s2.signs()) theta.emplace(alpha, s);
    b.theta = SignedSupport(n, std::move(theta));
    b.f = Polynomial(n);
    for (const auto& [alpha, e] : blk.coeff) b.f.set(alpha, e.evaluate(v));
    for (const auto& nb : blk.nonneg) {
      std::map<std::string, Rational> flows;
      for (const auto& [alpha, id] : nb.rho_s) flows["s->" + alpha.to_string()] = v.at(id);
      for (const auto& [key, id] : nb.rho_aj) flows[key.first.to_string() + "->" + std::to_string(key.second)] = v.at(id);
      for (const auto& [j, id] : nb.rho_js) flows[std::to_string(j) + "->s"] = v.at(id);
      for (const auto& [j, id] : nb.rho_jt) flows[std::to_string(j) + "->t"] = v.at(id);
      b.flows.push_back(std::move(flows));
    }
    cert.blocks.push_back(std::move(b));
  }

  if (!recheck || r.method == RelaxMethod::kSheraliAdams1) return cert;

  for (const auto& [alpha, c] : cert.g.terms()) {
    if (c < 0) throw std::runtime_error("certificate remainder has a negative coefficient on {" + alpha.to_string() + "}");
  }
  Polynomial sum = cert.g;
  for (const auto& b : cert.blocks) sum += b.f;
  Polynomial lhs = r.f;
  lhs.add(Support{}, -cert.lambda);
  if (!(lhs == sum)) throw std::runtime_error("certificate does not reproduce f - lambda");

  for (std::size_t k = 0; k < cert.blocks.size(); ++k) {
    const auto& b = cert.blocks[k];
    const auto& blk = r.blocks[k];
    if (!within(b.f, b.theta)) throw std::runtime_error("certificate block " + std::to_string(k) + " leaves its signed support");
    SignSplit split = decompose(b.f);
    for (std::size_t m = 0; m < blk.ext.selectors.size(); ++m) {
      Polynomial p = split.nn_part + apply(blk.ext.selectors[m], split.ps_part);
      if (minimize_nns(p).value < 0) {
        throw std::runtime_error("certificate block " + std::to_string(k) + " selector " + std::to_string(m) +
                                 " is not binary non-negative");
      }
    }
  }
  return cert;
}

namespace {

nlohmann::ordered_json poly_json(const Polynomial& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [alpha, c] : p.terms()) j[alpha.to_string()] = to_string(c);
  return j;
}

}  // namespace

std::string certificate_to_json(const RelaxationCertificate& cert) {
  nlohmann::ordered_json j;
  j["lambda"] = to_string(cert.lambda);
  j["g"] = poly_json(cert.g);
  j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : cert.blocks) {
    nlohmann::ordered_json jb;
    nlohmann::ordered_json theta = nlohmann::ordered_json::object();
    for (const auto& [alpha, s] : b.theta.signs()) theta[alpha.to_string()] = s;
    jb["theta"] = theta;
    jb["f"] = poly_json(b.f);
    jb["flows"] = nlohmann::ordered_json::array();
    for (const auto& fl : b.flows) {
      nlohmann::ordered_json jf = nlohmann::ordered_json::object();
      for (const auto& [name, val] : fl) jf[name] = to_string(val);
      jb["flows"].push_back(jf);
    }
    j["blocks"].push_back(jb);
  }
  return j.dump(2);
}

}  // namespace signcert
