#include "birkhoff/gkm.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace birkhoff {

Polynomial Character::linear_form() const {
  std::vector<Rational> coeffs;
  coeffs.reserve(weight.rank() + 1);
  coeffs.emplace_back(delta_coeff);
  for (auto c : weight.coords) coeffs.emplace_back(c);
  return Polynomial::linear(coeffs);
}

bool Character::proportional_to(const Character& o) const {
  std::vector<std::int64_t> a{delta_coeff}, b{o.delta_coeff};
  a.insert(a.end(), weight.coords.begin(), weight.coords.end());
  b.insert(b.end(), o.weight.coords.begin(), o.weight.coords.end());
  if (a.size() != b.size()) return false;
  // All 2x2 minors vanish.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

std::optional<std::size_t> GkmGraph::index_of(const AffineWeylElement& w) const {
  auto it = std::find(vertices.begin(), vertices.end(), w);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

GkmGraph build_gkm_graph(const AffineWeylGroup& g, std::vector<AffineWeylElement> vertices,
                         const ParabolicSubset& parabolic, int level_bound, std::optional<int> truncation_length) {
  g.check_parabolic(parabolic);
  if (level_bound < 1) throw DomainError("level_bound must be at least 1");
  for (auto& v : vertices) v = g.min_coset_rep(v, parabolic);
  canonical_sort(g, vertices);

  GkmGraph graph;
  graph.group = &g;
  graph.parabolic = parabolic;
  graph.truncation_length = truncation_length;
  graph.level_bound = level_bound;
  graph.vertices = std::move(vertices);

  std::unordered_map<AffineWeylElement, std::size_t, AffineWeylElementHash> index;
  std::vector<int> lengths;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    index.emplace(graph.vertices[i], i);
    lengths.push_back(g.length(graph.vertices[i]));
  }
  const auto roots = g.positive_real_roots(level_bound);
  std::vector<AffineWeylElement> reflections;
  reflections.reserve(roots.size());
  for (const auto& theta : roots) reflections.push_back(g.reflection(theta));

  // (src, dst, root index); each edge is found from both endpoints.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> keys;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    for (std::size_t r = 0; r < roots.size(); ++r) {
      auto target = g.min_coset_rep(reflections[r] * graph.vertices[i], parabolic);
      auto it = index.find(target);
      if (it == index.end() || it->second == i) continue;
      std::size_t a = i, b = it->second;
      if (lengths[b] < lengths[a] || (lengths[a] == lengths[b] && b < a)) std::swap(a, b);
      keys.emplace_back(a, b, r);
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (auto [a, b, r] : keys) {
    GkmEdge e{a, b, roots[r], Character::of(roots[r])};
    const bool duplicate = std::any_of(graph.edges.begin(), graph.edges.end(), [&](const GkmEdge& o) {
      return o.src == a && o.dst == b && o.label.proportional_to(e.label);
    });
    if (!duplicate) graph.edges.push_back(std::move(e));
  }
  return graph;
}

MembershipReport check_membership(const EquivariantFunction& f, const GkmGraph& g, Divisibility mode) {
  for (const auto& [id, p] : f) {
    if (id >= g.vertices.size()) throw DomainError("function is supported outside the graph (vertex " +
                                                   std::to_string(id) + ")");
    if (p.num_vars() != g.num_vars()) throw DomainError("function values use the wrong number of variables");
  }
  const Polynomial zero(g.num_vars());
  auto value = [&](std::size_t id) -> const Polynomial& {
    auto it = f.find(id);
    return it == f.end() ? zero : it->second;
  };
  MembershipReport report;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    const Polynomial diff = value(edge.src) - value(edge.dst);
    const Polynomial form = edge.label.linear_form();
    const bool ok = mode == Divisibility::rational ? divides_linear(form, diff) : divides_linear_integral(form, diff);
    if (!ok) report.violations.push_back(e);
  }
  report.member = report.violations.empty();
  return report;
}

EquivariantFunction constant_function(const GkmGraph& g, const Rational& c) {
  EquivariantFunction f;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) f.emplace(i, Polynomial::constant(g.num_vars(), c));
  return f;
}

namespace {

Polynomial vector_form(const std::vector<std::int64_t>& v) {
  std::vector<Rational> coeffs(v.begin(), v.end());
  return Polynomial::linear(coeffs);
}

std::vector<std::int64_t> minus(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

void check_chi(const GkmGraph& g, const std::vector<std::int64_t>& chi) {
  if (chi.size() != g.num_vars())
    throw DomainError("character has " + std::to_string(chi.size()) + " coordinates, expected " +
                      std::to_string(g.num_vars()));
}

}  // namespace

EquivariantFunction line_bundle_class(const GkmGraph& g, const std::vector<std::int64_t>& chi) {
  check_chi(g, chi);
  EquivariantFunction f;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    auto p = vector_form(minus(chi, g.vertices[i].apply(chi)));
    if (!p.is_zero()) f.emplace(i, std::move(p));
  }
  return f;
}

std::vector<AffineWeylElement> parabolic_subgroup(const AffineWeylGroup& g, const ParabolicSubset& parabolic) {
  g.check_parabolic(parabolic);
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen{g.identity()};
  std::vector<AffineWeylElement> out{g.identity()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i : parabolic.members()) {
      auto w = out[k] * g.generator(i);
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  }
  canonical_sort(g, out);
  return out;
}

EquivariantFunction symmetrized_class(const GkmGraph& g, const std::vector<std::int64_t>& chi, unsigned power) {
  check_chi(g, chi);
  const auto sub = parabolic_subgroup(*g.group, g.parabolic);
  std::vector<std::vector<std::int64_t>> orbit;
  orbit.reserve(sub.size());
  for (const auto& w : sub) orbit.push_back(w.apply(chi));
  EquivariantFunction f;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    Polynomial p(g.num_vars());
    for (const auto& wchi : orbit) p = p + vector_form(minus(chi, g.vertices[i].apply(wchi))).pow(power);
    if (!p.is_zero()) f.emplace(i, std::move(p));
  }
  return f;
}

Restriction restrict_to(const EquivariantFunction& f, const GkmGraph& g, const BruhatIdeal& upper) {
  if (upper.direction != IdealDirection::upper) throw DomainError("restriction target must be an upper ideal");
  if (!(upper.parabolic == g.parabolic)) throw DomainError("restriction: parabolic subsets differ");
  std::vector<std::size_t> old_ids;
  for (const auto& x : upper.elements) {
    auto id = g.index_of(x);
    if (!id)
      throw DomainError("restriction: ideal element " + word_to_string(g.group->reduced_word(x)) +
                        " is not a vertex of the graph");
    old_ids.push_back(*id);
  }
  std::unordered_map<std::size_t, std::size_t> remap;
  Restriction r;
  r.graph.group = g.group;
  r.graph.parabolic = g.parabolic;
  r.graph.truncation_length = upper.truncation_length;
  r.graph.level_bound = g.level_bound;
  for (std::size_t k = 0; k < old_ids.size(); ++k) {
    remap.emplace(old_ids[k], k);
    r.graph.vertices.push_back(g.vertices[old_ids[k]]);
  }
  for (const auto& e : g.edges) {
    auto a = remap.find(e.src), b = remap.find(e.dst);
    if (a == remap.end() || b == remap.end()) continue;
    r.graph.edges.push_back({a->second, b->second, e.root, e.label});
  }
  for (const auto& [id, p] : f) {
    auto it = remap.find(id);
    if (it != remap.end()) r.function.emplace(it->second, p);
  }
  return r;
}

WitnessReport injectivity_witnesses(const AffineWeylGroup& g, const AffineWeylElement& sigma,
                                    const BruhatIdeal& upper, std::size_t want, int level_bound) {
  if (upper.direction != IdealDirection::upper) throw DomainError("witness search needs an upper ideal");
  if (want < 1) throw DomainError("want must be at least 1");
  const auto& parabolic = upper.parabolic;
  const auto start = g.min_coset_rep(sigma, parabolic);
  const bool inside = std::any_of(upper.generators.begin(), upper.generators.end(), [&](const AffineWeylElement& x) {
    return bruhat_leq(g, x, start, parabolic).leq;
  });
  if (inside) throw DomainError("sigma lies in the upper ideal");

  WitnessReport report;
  report.requested = want;
  report.level_bound = level_bound;
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> members(upper.elements.begin(), upper.elements.end());
  for (const auto& theta : g.positive_real_roots(level_bound)) {
    if (report.found() >= want) break;
    auto target = g.min_coset_rep(g.reflection(theta) * start, parabolic);
    if (!members.count(target)) continue;
    const Character label = Character::of(theta);
    const bool clash = std::any_of(report.witnesses.begin(), report.witnesses.end(),
                                   [&](const Witness& w) { return Character::of(w.root).proportional_to(label); });
    if (clash) continue;
    report.witnesses.push_back({theta, std::move(target)});
  }
  return report;
}

nlohmann::json to_json(const GkmGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    vertices.push_back(
        {{"id", i}, {"word", g.group->reduced_word(g.vertices[i])}, {"length", g.group->length(g.vertices[i])}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges)
    edges.push_back(
        {{"src", e.src}, {"dst", e.dst}, {"label", {{"delta", e.label.delta_coeff}, {"weight", e.label.weight.coords}}}});
  return {
      {"type", std::string(1, to_char(g.group->datum().type()))},
      {"rank", g.group->rank()},
      {"parabolic", g.parabolic.members()},
      {"truncation_length", g.truncation_length ? nlohmann::json(*g.truncation_length) : nlohmann::json("complete")},
      {"level_bound", g.level_bound},
      {"vertices", vertices},
      {"edges", edges},
  };
}

nlohmann::json function_to_json(const EquivariantFunction& f) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, p] : f) out[std::to_string(id)] = to_json(p);
  return out;
}

EquivariantFunction function_from_json(const nlohmann::json& j, std::size_t num_vars) {
  if (!j.is_object()) throw DomainError("equivariant function must be a JSON object keyed by vertex id");
  EquivariantFunction f;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw DomainError("bad vertex id '" + key + "'");
    auto p = polynomial_from_json(value, num_vars);
    if (!p.is_zero()) f[id] = std::move(p);
  }
  return f;
}

GkmGraph graph_from_json(const AffineWeylGroup& g, const nlohmann::json& j) {
  GkmGraph graph;
  graph.group = &g;
  graph.parabolic = ParabolicSubset(j.at("parabolic").get<std::vector<int>>());
  g.check_parabolic(graph.parabolic);
  if (j.contains("truncation_length") && j.at("truncation_length").is_number_integer())
    graph.truncation_length = j.at("truncation_length").get<int>();
  graph.level_bound = j.at("level_bound").get<int>();
  for (const auto& v : j.at("vertices")) {
    if (v.at("id").get<std::size_t>() != graph.vertices.size())
      throw DomainError("vertex ids must be consecutive from 0");
    graph.vertices.push_back(g.from_word(v.at("word").get<Word>()));
  }
  for (const auto& e : j.at("edges")) {
    GkmEdge edge;
    edge.src = e.at("src").get<std::size_t>();
    edge.dst = e.at("dst").get<std::size_t>();
    if (edge.src >= graph.vertices.size() || edge.dst >= graph.vertices.size())
      throw DomainError("edge endpoint out of range");
    edge.label.delta_coeff = e.at("label").at("delta").get<std::int64_t>();
    edge.label.weight.coords = e.at("label").at("weight").get<std::vector<std::int64_t>>();
    if (edge.label.weight.rank() != static_cast<std::size_t>(g.rank())) throw DomainError("edge label has wrong rank");
    edge.root = {edge.label.delta_coeff, edge.label.weight};
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

nlohmann::json to_json(const AffineWeylGroup& g, const WitnessReport& r) {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"root", affine_root_to_json(w.root)},
                  {"label", {{"delta", w.root.level}, {"weight", w.root.finite.coords}}},
                  {"target", g.reduced_word(w.target)}});
  return {{"requested", r.requested}, {"found", r.found()}, {"level_bound", r.level_bound}, {"witnesses", ws}};
}

}  // namespace birkhoff
