#include "birkhoff/homology.hpp"

#include <algorithm>
#include <map>

namespace birkhoff {

GradedSeries GradedSeries::from_length_counts(const std::vector<std::int64_t>& counts, std::optional<int> cap) {
  GradedSeries s(cap);
  for (std::size_t k = 0; k < counts.size(); ++k) s.add(2 * static_cast<int>(k), counts[k]);
  return s;
}

std::int64_t GradedSeries::coefficient(int degree) const {
  for (const auto& [d, c] : terms_)
    if (d == degree) return c;
  return 0;
}

void GradedSeries::add(int degree, std::int64_t count) {
  if (degree < 0 || degree % 2 != 0) throw DomainError("graded series degrees must be even and nonnegative");
  if (count < 0) throw DomainError("graded series counts must be nonnegative");
  if (count == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                             [](const auto& t, int d) { return t.first < d; });
  if (it != terms_.end() && it->first == degree)
    it->second += count;
  else
    terms_.insert(it, {degree, count});
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
  std::optional<int> cap = cap_;
  if (o.cap_) cap = cap ? std::min(*cap, *o.cap_) : o.cap_;
  GradedSeries r(cap);
  for (const auto& [d, c] : terms_)
    if (!cap || d <= *cap) r.add(d, c);
  for (const auto& [d, c] : o.terms_)
    if (!cap || d <= *cap) r.add(d, c);
  return r;
}

bool GradedSeries::agrees_with(const GradedSeries& o, std::optional<int> up_to) const {
  std::map<int, std::int64_t> a, b;
  for (const auto& [d, c] : terms_)
    if (!up_to || d <= *up_to) a[d] = c;
  for (const auto& [d, c] : o.terms_)
    if (!up_to || d <= *up_to) b[d] = c;
  return a == b;
}

std::string GradedSeries::to_text() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (d == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c);
    s += "t^" + std::to_string(d);
  }
  if (cap_) s += " + O(t^" + std::to_string(*cap_ + 2) + ")";
  return s;
}

namespace {

GradedSeries count_by_length(const AffineWeylGroup& g, const std::vector<AffineWeylElement>& xs,
                             std::optional<int> cap) {
  GradedSeries s(cap);
  for (const auto& x : xs) {
    const int d = 2 * g.length(x);
    if (!cap || d <= *cap) s.add(d, 1);
  }
  return s;
}

}  // namespace

GradedSeries poincare_lower(const AffineWeylGroup& g, const BruhatIdeal& lower) {
  if (lower.direction != IdealDirection::lower) throw DomainError("poincare_lower expects a lower ideal");
  if (lower.truncation_length) throw DomainError("poincare_lower expects a complete lower ideal");
  return count_by_length(g, lower.elements, std::nullopt);
}

GradedSeries poincare_flag(const AffineWeylGroup& g, const ParabolicSubset& parabolic, int degree_cap) {
  if (degree_cap < 0 || degree_cap % 2 != 0) throw DomainError("degree cap must be even and nonnegative");
  return count_by_length(g, g.enumerate_min_reps(parabolic, degree_cap / 2), degree_cap);
}

GradedSeries poincare_pair(const AffineWeylGroup& g, const BruhatIdeal& upper) {
  if (upper.direction != IdealDirection::upper || !upper.truncation_length)
    throw DomainError("poincare_pair expects a truncated upper ideal");
  return count_by_length(g, upper.elements, 2 * *upper.truncation_length);
}

BirkhoffBetti betti_birkhoff(const AffineWeylGroup& g, const BruhatIdeal& upper, int degree_cap) {
  if (upper.direction != IdealDirection::upper) throw DomainError("betti_birkhoff expects an upper ideal");
  return {poincare_flag(g, upper.parabolic, degree_cap),
          "homotopy equivalence of the Birkhoff union with the flag variety; not a count of its cells"};
}

NeighborhoodPair vanishing_pair_S(const AffineWeylGroup& g, const BruhatIdeal& lower) {
  return {GradedSeries::zero(), poincare_lower(g, lower)};
}

RichardsonDims richardson_codim(const AffineWeylGroup& g, const AffineWeylElement& lambda,
                                const AffineWeylElement& mu, const ParabolicSubset& parabolic) {
  if (!bruhat_leq(g, lambda, mu, parabolic).leq)
    throw DomainError("richardson_codim requires lambda <= mu in the Bruhat order");
  const int l = g.parabolic_length(lambda, parabolic);
  const int m = g.parabolic_length(mu, parabolic);
  return {l, m - l};
}

std::optional<GradedSeries> pinf_toy(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("pinf_toy requires nonnegative n and m");
  if (n > m) return std::nullopt;
  GradedSeries s;
  for (int k = 0; k <= m - n; ++k) s.add(2 * k, 1);
  return s;
}

nlohmann::json to_json(const GradedSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [d, c] : s.terms()) terms.push_back({d, c});
  return {{"cap", s.cap() ? nlohmann::json(*s.cap()) : nlohmann::json("infinity")}, {"terms", terms}};
}

}  // namespace birkhoff
