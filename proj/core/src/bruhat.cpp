#include "birkhoff/bruhat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace birkhoff {

BruhatComparison bruhat_leq(const AffineWeylGroup& g, const AffineWeylElement& mu, const AffineWeylElement& lambda,
                            const ParabolicSubset& parabolic) {
  BruhatComparison result;
  AffineWeylElement u = g.min_coset_rep(mu, parabolic);
  AffineWeylElement v = g.min_coset_rep(lambda, parabolic);
  result.normalized = !(u == mu) || !(v == lambda);

  // For minimal representatives the quotient order is the order on W. If s
  // is a right descent of v then u <= v iff us <= vs (s a descent of u) or
  // u <= vs (otherwise).
  int lu = g.length(u);
  int lv = g.length(v);
  while (true) {
    if (lu > lv) return result;
    if (lv == 0) {
      result.leq = u.is_identity();
      return result;
    }
    if (lu == 0) {
      result.leq = true;
      return result;
    }
    int s = -1;
    for (int i = 0; i < g.num_generators(); ++i) {
      if (g.is_right_descent(v, i)) {
        s = i;
        break;
      }
    }
    if (g.is_right_descent(u, s)) {
      u = u * g.generator(s);
      --lu;
    }
    v = v * g.generator(s);
    --lv;
  }
}

void canonical_sort(const AffineWeylGroup& g, std::vector<AffineWeylElement>& elements) {
  std::vector<std::pair<Word, AffineWeylElement>> keyed;
  keyed.reserve(elements.size());
  for (auto& e : elements) keyed.emplace_back(g.reduced_word(e), std::move(e));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.second == b.second; }),
              keyed.end());
  elements.clear();
  for (auto& k : keyed) elements.push_back(std::move(k.second));
}

std::vector<AffineWeylElement> covers(const AffineWeylGroup& g, const AffineWeylElement& lambda,
                                      const ParabolicSubset& parabolic) {
  const AffineWeylElement top = g.min_coset_rep(lambda, parabolic);
  const int len = g.length(top);
  // A cover is t * lambda for a reflection t with l(t lambda) < l(lambda); those
  // reflections are exactly the ones attached to the inversion set.
  std::vector<AffineWeylElement> out;
  for (const auto& theta : g.inversion_set(top)) {
    AffineWeylElement mu = g.min_coset_rep(g.reflection(theta) * top, parabolic);
    if (g.length(mu) != len - 1) continue;
    if (!bruhat_leq(g, mu, top, parabolic).leq) continue;
    out.push_back(std::move(mu));
  }
  canonical_sort(g, out);
  return out;
}

bool BruhatIdeal::contains(const AffineWeylElement& w) const {
  return std::find(elements.begin(), elements.end(), w) != elements.end();
}

BruhatIdeal lower_ideal(const AffineWeylGroup& g, const std::vector<AffineWeylElement>& generators,
                        const ParabolicSubset& parabolic) {
  g.check_parabolic(parabolic);
  BruhatIdeal ideal;
  ideal.direction = IdealDirection::lower;
  ideal.parabolic = parabolic;
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen;
  std::vector<AffineWeylElement> queue;
  for (const auto& gen : generators) {
    auto rep = g.min_coset_rep(gen, parabolic);
    ideal.generators.push_back(rep);
    if (seen.insert(rep).second) queue.push_back(rep);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto& mu : covers(g, queue[k], parabolic))
      if (seen.insert(mu).second) queue.push_back(std::move(mu));
  }
  canonical_sort(g, ideal.generators);
  canonical_sort(g, queue);
  ideal.elements = std::move(queue);
  return ideal;
}

BruhatIdeal upper_ideal(const AffineWeylGroup& g, const std::vector<AffineWeylElement>& generators,
                        const ParabolicSubset& parabolic, int truncation_length) {
  g.check_parabolic(parabolic);
  BruhatIdeal ideal;
  ideal.direction = IdealDirection::upper;
  ideal.parabolic = parabolic;
  ideal.truncation_length = truncation_length;
  for (const auto& gen : generators) {
    auto rep = g.min_coset_rep(gen, parabolic);
    if (g.length(rep) > truncation_length)
      throw DomainError("truncation length " + std::to_string(truncation_length) +
                        " is below the length of generator " + word_to_string(g.reduced_word(rep)));
    ideal.generators.push_back(std::move(rep));
  }
  canonical_sort(g, ideal.generators);
  for (auto& x : g.enumerate_min_reps(parabolic, truncation_length)) {
    const bool above = std::any_of(ideal.generators.begin(), ideal.generators.end(),
                                   [&](const AffineWeylElement& gen) { return bruhat_leq(g, gen, x, parabolic).leq; });
    if (above) ideal.elements.push_back(std::move(x));
  }
  return ideal;
}

HasseDiagram hasse(const AffineWeylGroup& g, const std::vector<AffineWeylElement>& vertices,
                   const ParabolicSubset& parabolic) {
  HasseDiagram h;
  h.vertices = vertices;
  std::unordered_map<AffineWeylElement, std::size_t, AffineWeylElementHash> index;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) index.emplace(h.vertices[i], i);
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    for (const auto& mu : covers(g, h.vertices[i], parabolic)) {
      auto it = index.find(mu);
      if (it != index.end()) h.edges.emplace_back(i, it->second);
    }
  }
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

IntervalReport interval_connected(const AffineWeylGroup& g, const BruhatIdeal& upper, const BruhatIdeal& lower) {
  if (upper.direction != IdealDirection::upper || lower.direction != IdealDirection::lower)
    throw DomainError("interval_connected expects an upper ideal and a lower ideal");
  if (!(upper.parabolic == lower.parabolic))
    throw DomainError("interval_connected: ideals are over different parabolic subsets");
  const auto& parabolic = upper.parabolic;

  // Membership in the upper ideal is decided from its generators, so the
  // intersection does not depend on the upper ideal's truncation.
  std::vector<AffineWeylElement> common;
  for (const auto& x : lower.elements) {
    const bool above = std::any_of(upper.generators.begin(), upper.generators.end(),
                                   [&](const AffineWeylElement& gen) { return bruhat_leq(g, gen, x, parabolic).leq; });
    if (above) common.push_back(x);
  }
  IntervalReport report;
  if (common.empty()) return report;

  const HasseDiagram h = hasse(g, common, parabolic);
  std::vector<std::size_t> parent(common.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : h.edges) parent[find(a)] = find(b);
  std::size_t components = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++components;

  report.vertex_count = common.size();
  report.edge_count = h.edges.size();
  report.component_count = components;
  report.status = components == 1 ? Connectivity::connected : Connectivity::inconclusive;
  return report;
}

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::connected: return "connected";
    case Connectivity::inconclusive: return "criterion inconclusive";
    case Connectivity::empty: return "empty";
  }
  return "?";
}

std::string to_string(IdealDirection d) { return d == IdealDirection::upper ? "upper" : "lower"; }

namespace {

nlohmann::json words_json(const AffineWeylGroup& g, const std::vector<AffineWeylElement>& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(g.reduced_word(x));
  return out;
}

}  // namespace

nlohmann::json ideal_to_json(const AffineWeylGroup& g, const BruhatIdeal& ideal) {
  nlohmann::json j = {
      {"direction", to_string(ideal.direction)},
      {"parabolic", ideal.parabolic.members()},
      {"generators", words_json(g, ideal.generators)},
      {"elements", words_json(g, ideal.elements)},
  };
  if (ideal.truncation_length)
    j["truncation_length"] = *ideal.truncation_length;
  else
    j["truncation_length"] = "complete";
  return j;
}

nlohmann::json hasse_to_json(const AffineWeylGroup& g, const HasseDiagram& h, const ParabolicSubset& parabolic) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t i = 0; i < h.vertices.size(); ++i)
    vertices.push_back({{"id", i}, {"word", g.reduced_word(h.vertices[i])}, {"length", g.length(h.vertices[i])}});
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : h.edges) edges.push_back({{"src", a}, {"dst", b}});
  return {{"parabolic", parabolic.members()}, {"vertices", vertices}, {"edges", edges}};
}

std::string hasse_to_dot(const AffineWeylGroup& g, const HasseDiagram& h, const ParabolicSubset& parabolic) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  // " << g.datum().name() << " affine, parabolic {" << parabolic.to_string() << "}\n";
  os << "  rankdir=BT;\n";
  std::map<int, std::vector<std::size_t>> by_length;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    const int len = g.length(h.vertices[i]);
    by_length[len].push_back(i);
    os << "  v" << i << " [label=\"" << word_to_string(g.reduced_word(h.vertices[i])) << "\", rank=" << len << "];\n";
  }
  for (const auto& [len, ids] : by_length) {
    os << "  { rank=same;";
    for (auto i : ids) os << " v" << i << ";";
    os << " }\n";
  }
  for (auto [a, b] : h.edges) os << "  v" << b << " -> v" << a << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace birkhoff
