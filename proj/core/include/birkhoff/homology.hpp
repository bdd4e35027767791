#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "birkhoff/bruhat.hpp"

namespace birkhoff {

/// Poincare series sum count_d t^d over even degrees d, known exactly up to
/// `cap` (nullopt: the series is a polynomial and exact everywhere).
class GradedSeries {
public:
  GradedSeries() = default;
  explicit GradedSeries(std::optional<int> cap) : cap_(cap) {}

  static GradedSeries zero(std::optional<int> cap = std::nullopt) { return GradedSeries(cap); }
  /// counts[k] is the coefficient of t^{2k}.
  static GradedSeries from_length_counts(const std::vector<std::int64_t>& counts, std::optional<int> cap);

  const std::vector<std::pair<int, std::int64_t>>& terms() const { return terms_; }
  std::optional<int> cap() const { return cap_; }
  std::int64_t coefficient(int degree) const;
  bool is_zero() const { return terms_.empty(); }

  void add(int degree, std::int64_t count);

  /// Termwise sum; the cap of the result is the smaller cap.
  GradedSeries operator+(const GradedSeries& o) const;
  /// Coefficient equality for degrees <= up_to (all degrees if nullopt).
  bool agrees_with(const GradedSeries& o, std::optional<int> up_to = std::nullopt) const;

  std::string to_text() const;

  bool operator==(const GradedSeries&) const = default;

private:
  std::optional<int> cap_;
  std::vector<std::pair<int, std::int64_t>> terms_;
};

GradedSeries poincare_lower(const AffineWeylGroup& g, const BruhatIdeal& lower);
GradedSeries poincare_flag(const AffineWeylGroup& g, const ParabolicSubset& parabolic, int degree_cap);
GradedSeries poincare_pair(const AffineWeylGroup& g, const BruhatIdeal& upper);

/// Betti numbers of a Birkhoff union: equal to those of the whole flag
/// variety, since the union is homotopy equivalent to it. Reported, not
/// counted.
struct BirkhoffBetti {
  GradedSeries series;
  std::string provenance;
};
BirkhoffBetti betti_birkhoff(const AffineWeylGroup& g, const BruhatIdeal& upper, int degree_cap);

struct NeighborhoodPair {
  GradedSeries pair;        // H_*(S, S - X): vanishes
  GradedSeries complement;  // H_*(S - X) = H_*(X)
};
NeighborhoodPair vanishing_pair_S(const AffineWeylGroup& g, const BruhatIdeal& lower);

struct RichardsonDims {
  int codimension = 0;
  int dimension = 0;
};
/// Codimension and dimension of Z_lambda inside X_mu; requires lambda <= mu.
RichardsonDims richardson_codim(const AffineWeylGroup& g, const AffineWeylElement& lambda,
                                const AffineWeylElement& mu, const ParabolicSubset& parabolic);

/// 1 + t^2 + ... + t^{2(m-n)}; nullopt when n > m (empty intersection).
std::optional<GradedSeries> pinf_toy(int n, int m);

nlohmann::json to_json(const GradedSeries& s);

}  // namespace birkhoff
