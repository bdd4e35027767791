#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "birkhoff/affine_weyl.hpp"

namespace birkhoff {

/// Cocharacter (k, gamma) of the extended torus: k is the loop-rotation part.
struct OneParamSubgroup {
  std::int64_t k = 0;
  CorootVector gamma;
};

struct FlowReport {
  bool condition_a = false;  // alpha(gamma) < 0 for all positive alpha
  bool condition_b = false;  // k > max |alpha(gamma)|
  std::int64_t max_abs_pairing = 0;
  std::optional<RootVector> witness_a;  // a positive root with alpha(gamma) >= 0
  std::optional<RootVector> witness_b;  // a root attaining the maximum when (b) fails

  bool valid() const { return condition_a && condition_b; }
};

FlowReport validate_flow(const OneParamSubgroup& phi, const CartanDatum& datum);

/// (2h - 1, -2 rho^vee).
OneParamSubgroup canonical_flow(const CartanDatum& datum);

/// level * k + alpha(gamma).
std::int64_t affine_pairing(const CartanDatum& datum, const OneParamSubgroup& phi, const AffineRoot& theta);

/// Inversion set of a minimal representative; its size is the I-length.
std::vector<AffineRoot> inversion_set(const AffineWeylGroup& g, const AffineWeylElement& lambda,
                                      const ParabolicSubset& parabolic);

/// Weights of the flow on the cell of lambda, sorted ascending.
std::vector<std::int64_t> cell_weights(const AffineWeylGroup& g, const AffineWeylElement& lambda,
                                       const ParabolicSubset& parabolic, const OneParamSubgroup& phi);

/// Weights on the opposite stratum: pairings with the negated inversion roots.
std::vector<std::int64_t> opposite_cell_weights(const AffineWeylGroup& g, const AffineWeylElement& lambda,
                                                const ParabolicSubset& parabolic, const OneParamSubgroup& phi);

nlohmann::json to_json(const FlowReport& report);

}  // namespace birkhoff
