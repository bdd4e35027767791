#pragma once

#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "birkhoff/bruhat.hpp"
#include "birkhoff/polynomial.hpp"

namespace birkhoff {

/// Character n*delta + sum a_i alpha_i of the extended torus.
struct Character {
  std::int64_t delta_coeff = 0;
  RootVector weight;

  static Character of(const AffineRoot& theta) { return {theta.level, theta.finite}; }
  /// Linear form in the variables (delta, alpha_1, ..., alpha_r).
  Polynomial linear_form() const;
  bool proportional_to(const Character& o) const;

  auto operator<=>(const Character&) const = default;
};

struct GkmEdge {
  std::size_t src = 0;  // the shorter endpoint
  std::size_t dst = 0;
  AffineRoot root;      // positive real root of the reflection
  Character label;
};

/// Fixed-point graph: vertices are minimal coset representatives, edges join
/// sigma to the class of r_theta sigma for positive real theta.
struct GkmGraph {
  const AffineWeylGroup* group = nullptr;
  ParabolicSubset parabolic;
  std::optional<int> truncation_length;
  int level_bound = 0;
  std::vector<AffineWeylElement> vertices;
  std::vector<GkmEdge> edges;

  std::size_t num_vars() const { return static_cast<std::size_t>(group->rank()) + 1; }
  std::optional<std::size_t> index_of(const AffineWeylElement& w) const;
};

/// Edges are complete only up to `level_bound`, which is recorded in the graph.
GkmGraph build_gkm_graph(const AffineWeylGroup& g, std::vector<AffineWeylElement> vertices,
                         const ParabolicSubset& parabolic, int level_bound,
                         std::optional<int> truncation_length = std::nullopt);

/// Vertex id -> polynomial; missing ids carry the zero polynomial.
using EquivariantFunction = std::map<std::size_t, Polynomial>;

struct MembershipReport {
  bool member = true;
  std::vector<std::size_t> violations;  // indices into graph.edges
};

enum class Divisibility { rational, integral };

MembershipReport check_membership(const EquivariantFunction& f, const GkmGraph& g,
                                  Divisibility mode = Divisibility::rational);

EquivariantFunction constant_function(const GkmGraph& g, const Rational& c);

/// f(lambda) = chi - lambda(chi); chi is a vector in the (delta, alpha) basis.
EquivariantFunction line_bundle_class(const GkmGraph& g, const std::vector<std::int64_t>& chi);

/// f(lambda W_I) = sum over w in W_I of (chi - lambda w chi)^power. Well defined
/// on cosets for any chi; for I empty and power 1 it is line_bundle_class.
EquivariantFunction symmetrized_class(const GkmGraph& g, const std::vector<std::int64_t>& chi, unsigned power = 1);

/// Elements of the finite parabolic subgroup W_I.
std::vector<AffineWeylElement> parabolic_subgroup(const AffineWeylGroup& g, const ParabolicSubset& parabolic);

struct Restriction {
  GkmGraph graph;
  EquivariantFunction function;
};

/// Restriction of f to the elements of an upper ideal, with the induced subgraph.
Restriction restrict_to(const EquivariantFunction& f, const GkmGraph& g, const BruhatIdeal& upper);

struct Witness {
  AffineRoot root;
  AffineWeylElement target;
};

struct WitnessReport {
  std::vector<Witness> witnesses;
  std::size_t requested = 0;
  int level_bound = 0;
  std::size_t found() const { return witnesses.size(); }
};

/// Reflections theta (positive, level <= level_bound, scanned in
/// positive_real_roots order) carrying sigma into the upper ideal, keeping
/// only labels non-proportional to those already kept.
WitnessReport injectivity_witnesses(const AffineWeylGroup& g, const AffineWeylElement& sigma,
                                    const BruhatIdeal& upper, std::size_t want, int level_bound);

nlohmann::json to_json(const GkmGraph& g);
nlohmann::json function_to_json(const EquivariantFunction& f);
EquivariantFunction function_from_json(const nlohmann::json& j, std::size_t num_vars);

/// Graph with edges taken from JSON; vertices are rebuilt from their words.
GkmGraph graph_from_json(const AffineWeylGroup& g, const nlohmann::json& j);

nlohmann::json to_json(const AffineWeylGroup& g, const WitnessReport& r);

}  // namespace birkhoff
