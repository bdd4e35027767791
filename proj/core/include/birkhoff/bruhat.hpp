#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "birkhoff/affine_weyl.hpp"

namespace birkhoff {

struct BruhatComparison {
  bool leq = false;
  bool normalized = false;  // an input was not a minimal representative
};

/// mu <= lambda in the Bruhat order on W/W_I, via the right-descent lifting
/// recursion on minimal representatives.
BruhatComparison bruhat_leq(const AffineWeylGroup& g, const AffineWeylElement& mu, const AffineWeylElement& lambda,
                            const ParabolicSubset& parabolic);

/// All mu with lambda covering mu, sorted by reduced word.
std::vector<AffineWeylElement> covers(const AffineWeylGroup& g, const AffineWeylElement& lambda,
                                      const ParabolicSubset& parabolic);

enum class IdealDirection { upper, lower };

struct BruhatIdeal {
  IdealDirection direction = IdealDirection::lower;
  ParabolicSubset parabolic;
  std::vector<AffineWeylElement> elements;  // sorted by (length, reduced word)
  std::vector<AffineWeylElement> generators;
  std::optional<int> truncation_length;  // nullopt: complete

  bool contains(const AffineWeylElement& w) const;
};

BruhatIdeal lower_ideal(const AffineWeylGroup& g, const std::vector<AffineWeylElement>& generators,
                        const ParabolicSubset& parabolic);

BruhatIdeal upper_ideal(const AffineWeylGroup& g, const std::vector<AffineWeylElement>& generators,
                        const ParabolicSubset& parabolic, int truncation_length);

struct HasseDiagram {
  std::vector<AffineWeylElement> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (upper, lower) vertex indices
};

HasseDiagram hasse(const AffineWeylGroup& g, const std::vector<AffineWeylElement>& vertices,
                   const ParabolicSubset& parabolic);

enum class Connectivity { connected, inconclusive, empty };

struct IntervalReport {
  Connectivity status = Connectivity::empty;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
};

/// Connectivity of the Hasse diagram on upper_ideal intersected with
/// lower_ideal. "connected" implies path-connectedness of the corresponding
/// Richardson union; a disconnected diagram proves nothing.
IntervalReport interval_connected(const AffineWeylGroup& g, const BruhatIdeal& upper, const BruhatIdeal& lower);

std::string to_string(Connectivity c);
std::string to_string(IdealDirection d);

/// Sorts elements by (length, reduced word) and removes duplicates.
void canonical_sort(const AffineWeylGroup& g, std::vector<AffineWeylElement>& elements);

nlohmann::json ideal_to_json(const AffineWeylGroup& g, const BruhatIdeal& ideal);
nlohmann::json hasse_to_json(const AffineWeylGroup& g, const HasseDiagram& h, const ParabolicSubset& parabolic);
std::string hasse_to_dot(const AffineWeylGroup& g, const HasseDiagram& h, const ParabolicSubset& parabolic);

}  // namespace birkhoff
