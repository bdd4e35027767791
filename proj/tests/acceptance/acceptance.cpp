// Acceptance checks. Each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "birkhoff/flow.hpp"
#include "birkhoff/gkm.hpp"
#include "birkhoff/homology.hpp"
#include "test_support.hpp"

using namespace birkhoff;
using testing_support::affine;
using testing_support::affine_a;
using testing_support::to_window;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

struct QuotientConfig {
  int rank;
  ParabolicSubset parabolic;
  int max_len;
};

std::string label(int rank, const ParabolicSubset& p) {
  return "A" + std::to_string(rank) + " I=" + p.to_string();
}

// (1) alpha0(2 rho^vee) = 2 sum m_i = 2h - 2.
Outcome coxeter_identity() {
  Outcome out;
  for (auto [type, rank] : testing_support::supported_types(4)) {
    const auto d = build_cartan(type, rank);
    const auto two_rho = two_rho_coroot(d);
    const std::int64_t value = pairing(d, d.highest_root(), two_rho);
    std::int64_t marks = 0;
    for (auto m : d.marks()) marks += m;
    if (value != 2 * marks || value != 2 * d.coxeter_number() - 2) out.fail(d.name());
  }
  return out;
}

// (2) Canonical flow is valid and contracts every cell.
Outcome canonical_flow_positive() {
  Outcome out;
  for (auto [type, rank] : testing_support::supported_types(8)) {
    const auto d = build_cartan(type, rank);
    if (!validate_flow(canonical_flow(d), d).valid()) out.fail("invalid flow for " + d.name());
  }
  for (auto [type, rank] : std::vector<std::pair<RootType, int>>{{RootType::A, 1}, {RootType::A, 2}, {RootType::C, 2}}) {
    auto g = affine(type, rank);
    const auto phi = canonical_flow(g.datum());
    for (const auto& parabolic : {ParabolicSubset::empty(), ParabolicSubset::finite(rank)})
      for (const auto& lambda : g.enumerate_min_reps(parabolic, 8)) {
        const auto w = cell_weights(g, lambda, parabolic, phi);
        if (static_cast<int>(w.size()) != g.length(lambda)) out.fail("weight count mismatch");
        for (auto x : w)
          if (x <= 0) out.fail("nonpositive weight in " + g.datum().name() + " at " + word_to_string(g.reduced_word(lambda)));
      }
  }
  return out;
}

const std::vector<QuotientConfig>& oracle_configs() {
  static const std::vector<QuotientConfig> configs{{1, ParabolicSubset::empty(), 6},
                                                   {1, ParabolicSubset({1}), 6},
                                                   {2, ParabolicSubset::empty(), 5},
                                                   {2, ParabolicSubset::finite(2), 5}};
  return configs;
}

// (3) bruhat_leq against subword containment in the affine permutation model.
Outcome bruhat_oracle() {
  Outcome out;
  std::size_t pairs = 0;
  for (const auto& c : oracle_configs()) {
    auto g = affine_a(c.rank);
    oracle::AffinePerm model(c.rank + 1);
    const auto reps = g.enumerate_min_reps(c.parabolic, c.max_len);
    std::vector<oracle::Window> windows;
    std::vector<std::set<oracle::Window>> below;
    for (const auto& l : reps) {
      windows.push_back(to_window(model, g, l));
      below.push_back(model.subword_products(g.reduced_word(l)));
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j, ++pairs)
        if (bruhat_leq(g, reps[i], reps[j], c.parabolic).leq != (below[j].count(windows[i]) > 0))
          out.fail("mismatch in " + label(c.rank, c.parabolic));
  }
  out.detail = out.ok ? std::to_string(pairs) + " pairs" : out.detail;
  return out;
}

// (4) Lower ideals of random generators are finite and downward closed.
Outcome lower_ideal_finite() {
  Outcome out;
  std::mt19937 rng(41);
  std::size_t total = 0;
  for (auto [type, rank] : std::vector<std::pair<RootType, int>>{{RootType::A, 1}, {RootType::A, 2}, {RootType::C, 2}}) {
    auto g = affine(type, rank);
    for (const auto& parabolic : {ParabolicSubset::empty(), ParabolicSubset::finite(rank)})
      for (int k = 0; k < 25; ++k) {
        const auto gen = g.min_coset_rep(g.from_word(testing_support::random_word(rng, g.num_generators(), 10)), parabolic);
        const auto ideal = lower_ideal(g, {gen}, parabolic);
        total += ideal.elements.size();
        if (ideal.truncation_length) out.fail("lower ideal reported as truncated");
        for (const auto& x : ideal.elements) {
          if (g.length(x) > g.length(gen) || !bruhat_leq(g, x, gen, parabolic).leq) out.fail("element not below generator");
          for (const auto& c : covers(g, x, parabolic))
            if (!ideal.contains(c)) out.fail("ideal not downward closed");
        }
      }
  }
  if (out.ok) out.detail = std::to_string(total) + " elements";
  return out;
}

// (5) Cells split between the complementary lower ideal and the upper ideal.
Outcome partition_identity() {
  Outcome out;
  constexpr int truncation = 6;
  constexpr int cap = 2 * truncation;
  constexpr int wanted = 50;
  std::mt19937 rng(53);
  for (const auto& c : oracle_configs()) {
    auto g = affine_a(c.rank);
    const auto small = g.enumerate_min_reps(c.parabolic, 3);
    const auto all = g.enumerate_min_reps(c.parabolic, truncation + 1);
    const auto flag = poincare_flag(g, c.parabolic, cap);
    std::uniform_int_distribution<std::size_t> pick(1, small.size() - 1);
    std::uniform_int_distribution<int> count(1, 3);
    int accepted = 0;
    for (int attempt = 0; attempt < 5000 && accepted < wanted; ++attempt) {
      std::vector<AffineWeylElement> gens;
      for (int k = count(rng); k > 0; --k) gens.push_back(small[pick(rng)]);
      const auto upper = upper_ideal(g, gens, c.parabolic, truncation);
      std::vector<AffineWeylElement> rest;
      bool bounded = true;
      for (const auto& x : all) {
        bool above = false;
        for (const auto& y : gens) above = above || bruhat_leq(g, y, x, c.parabolic).leq;
        if (above) continue;
        if (g.length(x) > truncation) bounded = false;
        rest.push_back(x);
      }
      // The complementary lower ideal must be finite and inside the truncation.
      if (!bounded) continue;
      ++accepted;
      const auto lower = lower_ideal(g, rest, c.parabolic);
      if (lower.elements.size() != rest.size()) out.fail("complement is not a lower ideal");
      const auto sum = poincare_lower(g, lower) + poincare_pair(g, upper);
      if (sum.cap() != cap || !flag.agrees_with(sum)) out.fail("identity fails in " + label(c.rank, c.parabolic));
    }
    if (accepted < wanted) out.fail("only " + std::to_string(accepted) + " complementary pairs in " + label(c.rank, c.parabolic));
  }
  if (out.ok) out.detail = std::to_string(wanted) + " pairs per configuration";
  return out;
}

// (6) GKM membership of constants and line bundle classes.
Outcome gkm_membership() {
  Outcome out;
  constexpr int truncation = 5;
  constexpr int level = 6;
  std::size_t functions = 0, perturbations = 0;
  for (const auto& c : std::vector<QuotientConfig>{{1, ParabolicSubset::empty(), truncation},
                                                   {1, ParabolicSubset({1}), truncation},
                                                   {2, ParabolicSubset::finite(2), truncation}}) {
    auto g = affine_a(c.rank);
    const auto graph = build_gkm_graph(g, g.enumerate_min_reps(c.parabolic, truncation), c.parabolic, level, truncation);
    const std::size_t n = graph.num_vars();
    std::vector<EquivariantFunction> members{constant_function(graph, 1), constant_function(graph, -3)};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> chi(n, 0);
      chi[i] = 1;
      if (c.parabolic.members().empty()) {
        members.push_back(line_bundle_class(graph, chi));
      } else {
        // On a quotient the class must be constant on cosets.
        members.push_back(symmetrized_class(graph, chi, 1));
        members.push_back(symmetrized_class(graph, chi, 2));
      }
    }
    for (const auto& f : members) {
      ++functions;
      if (!check_membership(f, graph).member) {
        out.fail("member rejected in " + label(c.rank, c.parabolic));
        continue;
      }
      for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        std::set<std::size_t> incident;
        for (std::size_t e = 0; e < graph.edges.size(); ++e)
          if (graph.edges[e].src == v || graph.edges[e].dst == v) incident.insert(e);
        if (incident.empty()) continue;
        auto h = f;
        const auto one = Polynomial::constant(n, 1);
        auto it = h.find(v);
        if (it == h.end())
          h.emplace(v, one);
        else
          it->second = it->second + one;
        ++perturbations;
        const auto report = check_membership(h, graph);
        if (report.member || std::set<std::size_t>(report.violations.begin(), report.violations.end()) != incident)
          out.fail("perturbation not caught at vertex " + std::to_string(v));
      }
    }
  }
  if (out.ok) out.detail = std::to_string(functions) + " classes, " + std::to_string(perturbations) + " perturbations";
  return out;
}

// (7) At least three independent witnesses for every sigma outside the ideal.
Outcome injectivity() {
  Outcome out;
  constexpr int truncation = 10;
  std::size_t cases = 0;
  for (const auto& c : oracle_configs()) {
    auto g = affine_a(c.rank);
    const auto candidates = g.enumerate_min_reps(c.parabolic, 3);
    for (const auto& gen : g.enumerate_min_reps(c.parabolic, 2)) {
      if (gen.is_identity()) continue;  // the whole quotient; nothing lies outside
      const auto upper = upper_ideal(g, {gen}, c.parabolic, truncation);
      for (const auto& sigma : candidates) {
        if (bruhat_leq(g, gen, sigma, c.parabolic).leq) continue;
        ++cases;
        std::size_t previous = 0;
        std::size_t best = 0;
        for (int level : {4, 6, 8}) {
          const auto r = injectivity_witnesses(g, sigma, upper, 3, level);
          if (r.found() < previous) out.fail("found-count decreased");
          previous = r.found();
          best = r.found();
          for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
            if (!upper.contains(r.witnesses[i].target)) out.fail("witness target outside the ideal");
            for (std::size_t j = 0; j < i; ++j)
              if (Character::of(r.witnesses[i].root).proportional_to(Character::of(r.witnesses[j].root)))
                out.fail("proportional witnesses");
          }
        }
        if (best < 3)
          out.fail("only " + std::to_string(best) + " witnesses for " + word_to_string(g.reduced_word(sigma)) + " in " +
                   label(c.rank, c.parabolic));
      }
    }
  }
  if (out.ok) out.detail = std::to_string(cases) + " (sigma, ideal) pairs";
  return out;
}

// (8) Codimension of Z_lambda in X_mu is the length of lambda.
Outcome richardson() {
  Outcome out;
  std::size_t pairs = 0;
  for (const auto& c : oracle_configs()) {
    auto g = affine_a(c.rank);
    oracle::AffinePerm model(c.rank + 1);
    const auto sub = model.subgroup(c.parabolic.members());
    const auto reps = g.enumerate_min_reps(c.parabolic, 5);
    for (const auto& mu : reps) {
      const auto below = model.subword_products(g.reduced_word(mu));
      const int mu_len = model.coset(to_window(model, g, mu), sub).second;
      for (const auto& lambda : reps) {
        if (!below.count(to_window(model, g, lambda))) continue;
        ++pairs;
        const int lambda_len = model.coset(to_window(model, g, lambda), sub).second;
        const auto d = richardson_codim(g, lambda, mu, c.parabolic);
        if (d.codimension != lambda_len || d.dimension != mu_len - lambda_len || d.dimension < 0)
          out.fail("dimension mismatch in " + label(c.rank, c.parabolic));
        if (lambda == mu && d.dimension != 0) out.fail("lambda = mu with positive dimension");
      }
    }
  }
  if (out.ok) out.detail = std::to_string(pairs) + " comparable pairs";
  return out;
}

// Brute force over the model: is the cover graph on [lambda, mu] connected?
bool oracle_interval_connected(const oracle::AffinePerm& model, const std::vector<std::set<oracle::Window>>& below,
                               const std::vector<oracle::Window>& windows, const std::vector<int>& lengths,
                               std::size_t lo, std::size_t hi, std::size_t& size) {
  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < windows.size(); ++k)
    if (below[hi].count(windows[k]) && below[k].count(windows[lo])) members.push_back(k);
  size = members.size();
  std::set<std::size_t> seen{members.front()};
  std::vector<std::size_t> stack{members.front()};
  while (!stack.empty()) {
    const auto a = stack.back();
    stack.pop_back();
    for (auto b : members) {
      if (seen.count(b)) continue;
      const bool adjacent = (lengths[a] + 1 == lengths[b] && below[b].count(windows[a])) ||
                            (lengths[b] + 1 == lengths[a] && below[a].count(windows[b]));
      if (adjacent) {
        seen.insert(b);
        stack.push_back(b);
      }
    }
  }
  (void)model;
  return seen.size() == members.size();
}

// (9) Principal intervals have connected Hasse diagrams.
Outcome connectivity() {
  Outcome out;
  std::size_t intervals = 0;
  for (const auto& c : oracle_configs()) {
    auto g = affine_a(c.rank);
    oracle::AffinePerm model(c.rank + 1);
    const auto reps = g.enumerate_min_reps(c.parabolic, 5);
    std::vector<oracle::Window> windows;
    std::vector<std::set<oracle::Window>> below;
    std::vector<int> lengths;
    for (const auto& l : reps) {
      windows.push_back(to_window(model, g, l));
      below.push_back(model.subword_products(g.reduced_word(l)));
      lengths.push_back(g.length(l));
    }
    for (std::size_t lo = 0; lo < reps.size(); ++lo) {
      const auto upper = upper_ideal(g, {reps[lo]}, c.parabolic, 5);
      for (std::size_t hi = 0; hi < reps.size(); ++hi) {
        if (!below[hi].count(windows[lo])) continue;
        ++intervals;
        std::size_t size = 0;
        const bool expected = oracle_interval_connected(model, below, windows, lengths, lo, hi, size);
        const auto report = interval_connected(g, upper, lower_ideal(g, {reps[hi]}, c.parabolic));
        if (report.status != Connectivity::connected || !expected || report.vertex_count != size)
          out.fail("interval " + word_to_string(g.reduced_word(reps[lo])) + " .. " +
                   word_to_string(g.reduced_word(reps[hi])) + " in " + label(c.rank, c.parabolic));
      }
    }
  }
  if (out.ok) out.detail = std::to_string(intervals) + " intervals";
  return out;
}

// (10) Z_n meets P^m in P^{m-n}.
Outcome pinf() {
  Outcome out;
  for (int m = 0; m <= 20; ++m)
    for (int n = 0; n <= m; ++n) {
      const auto s = pinf_toy(n, m);
      if (!s) {
        out.fail("empty result for n <= m");
        continue;
      }
      std::string expected = "1";
      for (int k = 1; k <= m - n; ++k) expected += " + t^" + std::to_string(2 * k);
      if (s->to_text() != expected) out.fail("pinf_toy(" + std::to_string(n) + ", " + std::to_string(m) + ")");
      for (int k = 0; k <= m - n + 1; ++k)
        if (s->coefficient(2 * k) != (k <= m - n ? 1 : 0)) out.fail("coefficient mismatch");
    }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "coxeter identity", 1.0, coxeter_identity},
      {2, "canonical flow", 10.0, canonical_flow_positive},
      {3, "bruhat oracle equivalence", 60.0, bruhat_oracle},
      {4, "lower ideal finiteness", 30.0, lower_ideal_finite},
      {5, "partition identity", 30.0, partition_identity},
      {6, "gkm membership", 60.0, gkm_membership},
      {7, "injectivity witnesses", 60.0, injectivity},
      {8, "richardson codimension", 10.0, richardson},
      {9, "connectivity criterion", 30.0, connectivity},
      {10, "pinf toy", 1.0, pinf},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) o.fail("time limit exceeded");
    if (!o.ok) ++failures;
    std::printf("[%s] %2d %-28s %7.3f s (limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, seconds,
                c.limit_seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
