#include "birkhoff/flow.hpp"

#include <algorithm>
#include <cstdlib>

namespace birkhoff {

FlowReport validate_flow(const OneParamSubgroup& phi, const CartanDatum& datum) {
  if (phi.gamma.rank() != static_cast<std::size_t>(datum.rank()))
    throw DomainError("gamma has " + std::to_string(phi.gamma.rank()) + " coordinates, expected " +
                      std::to_string(datum.rank()));
  FlowReport r;
  r.condition_a = true;
  const RootVector* argmax = nullptr;
  for (const auto& alpha : datum.positive_roots()) {
    const auto p = datum.pairing(alpha, phi.gamma);
    if (p >= 0 && r.condition_a) {
      r.condition_a = false;
      r.witness_a = alpha;
    }
    // |(-alpha)(gamma)| = |alpha(gamma)|, so positive roots suffice for the max.
    const std::int64_t a = std::llabs(p);
    if (argmax == nullptr || a > r.max_abs_pairing) {
      r.max_abs_pairing = a;
      argmax = &alpha;
    }
  }
  r.condition_b = phi.k > r.max_abs_pairing;
  if (!r.condition_b && argmax) r.witness_b = *argmax;
  return r;
}

OneParamSubgroup canonical_flow(const CartanDatum& datum) {
  return {2 * datum.coxeter_number() - 1, -two_rho_coroot(datum)};
}

std::int64_t affine_pairing(const CartanDatum& datum, const OneParamSubgroup& phi, const AffineRoot& theta) {
  return theta.level * phi.k + datum.pairing(theta.finite, phi.gamma);
}

std::vector<AffineRoot> inversion_set(const AffineWeylGroup& g, const AffineWeylElement& lambda,
                                      const ParabolicSubset& parabolic) {
  if (!g.is_min_rep(lambda, parabolic))
    throw DomainError("inversion_set expects a minimal coset representative");
  return g.inversion_set(lambda);
}

std::vector<std::int64_t> cell_weights(const AffineWeylGroup& g, const AffineWeylElement& lambda,
                                       const ParabolicSubset& parabolic, const OneParamSubgroup& phi) {
  std::vector<std::int64_t> w;
  for (const auto& theta : inversion_set(g, lambda, parabolic)) w.push_back(affine_pairing(g.datum(), phi, theta));
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<std::int64_t> opposite_cell_weights(const AffineWeylGroup& g, const AffineWeylElement& lambda,
                                                const ParabolicSubset& parabolic, const OneParamSubgroup& phi) {
  std::vector<std::int64_t> w;
  for (const auto& theta : inversion_set(g, lambda, parabolic))
    w.push_back(affine_pairing(g.datum(), phi, {-theta.level, -theta.finite}));
  std::sort(w.begin(), w.end());
  return w;
}

nlohmann::json to_json(const FlowReport& report) {
  nlohmann::json j = {
      {"condition_a", report.condition_a},
      {"condition_b", report.condition_b},
      {"max_abs_pairing", report.max_abs_pairing},
  };
  j["witness_a"] = report.witness_a ? nlohmann::json(report.witness_a->coords) : nlohmann::json(nullptr);
  j["witness_b"] = report.witness_b ? nlohmann::json(report.witness_b->coords) : nlohmann::json(nullptr);
  return j;
}

}  // namespace birkhoff
