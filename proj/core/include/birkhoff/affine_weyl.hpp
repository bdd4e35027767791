#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "birkhoff/root_system.hpp"

namespace birkhoff {

/// Word over the affine Coxeter generators; index 0 is s0, indices 1..r are
/// the finite simple reflections. A word lists the product left to right.
using Word = std::vector<int>;

/// Affine root (level, finite part). Real iff the finite part is nonzero.
struct AffineRoot {
  std::int64_t level = 0;
  RootVector finite;

  bool is_real() const { return !finite.is_zero(); }
  bool is_imaginary() const { return finite.is_zero() && level != 0; }

  auto operator<=>(const AffineRoot&) const = default;
};

/// Positive iff level > 0, or level = 0 and the finite part is a negative root.
bool is_positive(const AffineRoot& theta);

/// Element of the affine Weyl group as an integer matrix on Z delta + Q
/// (basis delta, alpha_1..alpha_r), acting on column vectors.
class AffineWeylElement {
public:
  AffineWeylElement() = default;
  explicit AffineWeylElement(std::size_t dim);  // identity
  AffineWeylElement(std::size_t dim, std::vector<std::int64_t> entries);

  std::size_t dim() const { return dim_; }
  std::int64_t operator()(std::size_t row, std::size_t col) const { return m_[row * dim_ + col]; }
  const std::vector<std::int64_t>& entries() const { return m_; }
  bool is_identity() const;

  AffineRoot apply(const AffineRoot& theta) const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

  AffineWeylElement operator*(const AffineWeylElement& o) const;

  std::vector<std::vector<std::int64_t>> rows() const;

  bool operator==(const AffineWeylElement& o) const { return m_ == o.m_; }
  bool operator<(const AffineWeylElement& o) const { return m_ < o.m_; }

private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> m_;
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& w) const noexcept;
};

/// Subset of generator indices {0, ..., rank}.
class ParabolicSubset {
public:
  ParabolicSubset() = default;
  ParabolicSubset(std::vector<int> members);

  static ParabolicSubset empty() { return {}; }
  /// The finite generators S = {1, ..., rank}.
  static ParabolicSubset finite(int rank);

  const std::vector<int>& members() const { return members_; }
  bool contains(int i) const;
  bool is_empty() const { return members_.empty(); }
  std::string to_string() const;

  bool operator==(const ParabolicSubset&) const = default;

private:
  std::vector<int> members_;
};

/// The affine Weyl group of a Cartan datum together with its generators.
///
/// All group-theoretic operations live here because they need the datum:
/// simple affine roots, reflections, lengths, descents and parabolic
/// quotients. Elements are plain values and may be shared across threads.
class AffineWeylGroup {
public:
  explicit AffineWeylGroup(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int num_generators() const { return datum_.rank() + 1; }
  std::size_t dim() const { return static_cast<std::size_t>(datum_.rank()) + 1; }

  /// [(1, alpha0), (0, -alpha_1), ..., (0, -alpha_r)].
  const std::vector<AffineRoot>& simple_roots() const { return simple_roots_; }
  const AffineWeylElement& generator(int i) const { return generators_.at(static_cast<std::size_t>(i)); }
  AffineWeylElement identity() const { return AffineWeylElement(dim()); }

  bool is_root(const AffineRoot& theta) const;
  AffineWeylElement reflection(const AffineRoot& theta) const;

  AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b) const { return a * b; }
  AffineWeylElement invert(const AffineWeylElement& w) const;
  AffineWeylElement from_word(const Word& word) const;

  bool is_right_descent(const AffineWeylElement& w, int i) const;
  bool is_left_descent(const AffineWeylElement& w, int i) const;
  std::vector<int> right_descents(const AffineWeylElement& w) const;
  std::vector<int> left_descents(const AffineWeylElement& w) const;

  int length(const AffineWeylElement& w) const;
  Word reduced_word(const AffineWeylElement& w) const;

  /// Strips right descents in I; rejects I = all generators.
  AffineWeylElement min_coset_rep(const AffineWeylElement& w, const ParabolicSubset& parabolic) const;
  int parabolic_length(const AffineWeylElement& w, const ParabolicSubset& parabolic) const;
  bool is_min_rep(const AffineWeylElement& w, const ParabolicSubset& parabolic) const;

  /// Every minimal coset representative with I-length <= max_length, sorted
  /// by (length, reduced word).
  std::vector<AffineWeylElement> enumerate_min_reps(const ParabolicSubset& parabolic, int max_length) const;

  /// Positive real affine roots with level <= max_level, ordered by level,
  /// then (at level >= 1) positive finite parts before negative ones, each in
  /// datum order.
  std::vector<AffineRoot> positive_real_roots(int max_level) const;

  /// {theta > 0 : w^{-1} theta < 0}, listed along the reduced word of w.
  std::vector<AffineRoot> inversion_set(const AffineWeylElement& w) const;

  /// Throws DomainError unless I is a proper subset of the generators.
  void check_parabolic(const ParabolicSubset& parabolic) const;

private:
  CartanDatum datum_;
  std::vector<AffineRoot> simple_roots_;
  std::vector<AffineWeylElement> generators_;
};

inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string word_to_string(const Word& w);
/// Parses "1,0,2"; "e" or "" is the identity.
Word parse_word(const std::string& text);

nlohmann::json element_to_json(const AffineWeylGroup& g, const AffineWeylElement& w);
nlohmann::json affine_root_to_json(const AffineRoot& theta);

}  // namespace birkhoff
