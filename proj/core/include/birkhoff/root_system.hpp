#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "birkhoff/error.hpp"

namespace birkhoff {

enum class RootType { A, B, C, D };

char to_char(RootType t);
RootType root_type_from_char(char c);

/// Integer vector in the simple-root basis.
struct RootVector {
  std::vector<std::int64_t> coords;

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  bool is_positive() const;  // all >= 0, not all zero
  bool is_negative() const;
  std::int64_t height() const;

  RootVector operator-() const;
  RootVector operator+(const RootVector& o) const;
  RootVector operator-(const RootVector& o) const;
  RootVector scaled(std::int64_t c) const;

  auto operator<=>(const RootVector&) const = default;
};

/// Integer vector in the simple-coroot basis.
struct CorootVector {
  std::vector<std::int64_t> coords;

  std::size_t rank() const { return coords.size(); }
  CorootVector operator-() const;
  CorootVector operator+(const CorootVector& o) const;
  CorootVector scaled(std::int64_t c) const;

  auto operator<=>(const CorootVector&) const = default;
};

/// Finite simple root datum of classical type.
///
/// The Cartan matrix is stored so that `cartan[i][j]` is the pairing of the
/// simple root i with the simple coroot j. Positive roots are generated by
/// closure under simple reflections and kept in (height, lex) order; each
/// root carries its coroot, transported along the same reflections.
class CartanDatum {
public:
  static CartanDatum build(RootType type, int rank);

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  const std::vector<CorootVector>& positive_coroots() const { return positive_coroots_; }
  const RootVector& highest_root() const { return positive_roots_.back(); }
  const std::vector<std::int64_t>& marks() const { return highest_root().coords; }
  int coxeter_number() const;
  std::string name() const;

  RootVector simple_root(int i) const;
  CorootVector simple_coroot(int i) const;

  /// Index into positive_roots(), or nullopt if `beta` is not a positive root.
  std::optional<std::size_t> positive_index(const RootVector& beta) const;
  bool is_root(const RootVector& beta) const;

  /// Coroot of a (positive or negative) root.
  CorootVector coroot_of(const RootVector& beta) const;

  std::int64_t pairing(const RootVector& beta, const CorootVector& mu) const;

  /// Simple reflection s_i applied to a root-lattice vector.
  RootVector reflect(int i, const RootVector& beta) const;
  /// Reflection r_alpha applied to a root-lattice vector.
  RootVector reflect(const RootVector& alpha, const RootVector& beta) const;

private:
  CartanDatum() = default;
  void close_roots();

  RootType type_ = RootType::A;
  int rank_ = 0;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<RootVector> positive_roots_;
  std::vector<CorootVector> positive_coroots_;
};

inline CartanDatum build_cartan(RootType type, int rank) { return CartanDatum::build(type, rank); }

inline std::int64_t pairing(const CartanDatum& d, const RootVector& beta, const CorootVector& mu) {
  return d.pairing(beta, mu);
}

/// Sum of positive coroots, checked against twice the sum of the fundamental
/// coweights (which are solved from the Cartan matrix independently).
CorootVector two_rho_coroot(const CartanDatum& d);

/// Twice the sum of fundamental coweights, via exact inversion of the Cartan matrix.
CorootVector twice_fundamental_coweight_sum(const CartanDatum& d);

nlohmann::json to_json(const CartanDatum& d);

}  // namespace birkhoff
