// birkhoff: command-line front end for the affine flag toolkit.
//
// Exit codes: 0 success, 1 domain rejection (error JSON on stderr),
// 2 malformed invocation. Boolean queries exit 0/1 for true/false when
// --strict-exit is given; flow validate always does.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "birkhoff/flow.hpp"
#include "birkhoff/gkm.hpp"
#include "birkhoff/homology.hpp"

#ifndef BIRKHOFF_VERSION
#define BIRKHOFF_VERSION "unknown"
#endif

using nlohmann::json;
using namespace birkhoff;

namespace {

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type = "A";
  int rank = 1;
  std::string parabolic = "none";
  std::string format = "json";
  bool strict_exit = false;
  std::string config;

  std::string word, mu, lambda, sigma, generators, direction = "lower";
  std::optional<int> max_length;
  std::optional<int> level_bound;
  std::optional<int> cap;
  std::optional<std::int64_t> k;
  std::string gamma;
  bool canonical = false;
  std::string graph_path, function_path, character;
  std::optional<std::int64_t> constant;
  unsigned power = 1;
  std::string divisibility = "rational";
  std::size_t want = 3;
  int n = 0, m = 0;
};

// ---- parsing helpers ----

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& s, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& tok : split(s, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(tok, &used));
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != tok.size() || tok.empty()) throw UsageError(std::string("malformed ") + what + ": '" + s + "'");
  }
  return out;
}

ParabolicSubset parse_parabolic(const std::string& s) {
  if (s == "none" || s.empty()) return ParabolicSubset::empty();
  std::vector<int> members;
  for (auto x : parse_ints(s, "parabolic subset")) members.push_back(static_cast<int>(x));
  return ParabolicSubset(members);
}

Word word_arg(const std::string& s, const char* what) {
  try {
    return parse_word(s);
  } catch (const DomainError& e) {
    throw UsageError(std::string("malformed ") + what + ": " + e.what());
  }
}

AffineWeylElement element_arg(const AffineWeylGroup& g, const std::string& s, const char* what) {
  return g.from_word(word_arg(s, what));
}

std::vector<AffineWeylElement> elements_arg(const AffineWeylGroup& g, const std::string& s, const char* what) {
  std::vector<AffineWeylElement> out;
  for (const auto& piece : split(s, ';')) out.push_back(element_arg(g, piece, what));
  return out;
}

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

void require_nonempty(const std::string& v, const char* flag) {
  if (v.empty()) throw UsageError(std::string(flag) + " is required");
}

AffineWeylGroup make_group(const Options& o) {
  if (o.type.size() != 1) throw UsageError("--type takes a single letter");
  return AffineWeylGroup(build_cartan(root_type_from_char(o.type[0]), o.rank));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
}

// ---- output helpers ----

struct Result {
  json body;
  std::string text;
  std::optional<bool> truth;  // for boolean queries
  bool exit_by_truth = false;  // exit 0/1 even without --strict-exit
};

json stamped(const std::string& command, json body) {
  json out = {{"version", BIRKHOFF_VERSION}, {"command", command}};
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

std::string text_lines(const AffineWeylGroup& g, const std::vector<AffineWeylElement>& xs) {
  std::string s;
  for (const auto& x : xs) s += word_to_string(g.reduced_word(x)) + "\n";
  return s;
}

json flow_json(const OneParamSubgroup& phi) { return {{"k", phi.k}, {"gamma", phi.gamma.coords}}; }

OneParamSubgroup flow_arg(const Options& o, const CartanDatum& d) {
  if (o.canonical || (!o.k && o.gamma.empty())) return canonical_flow(d);
  if (!o.k || o.gamma.empty()) throw UsageError("--k and --gamma go together");
  return {*o.k, CorootVector{parse_ints(o.gamma, "--gamma")}};
}

// ---- commands ----

Result roots_show(const Options& o) {
  const auto g = make_group(o);
  const auto& d = g.datum();
  std::ostringstream t;
  t << d.name() << "\n";
  t << "cartan:";
  for (const auto& row : d.cartan()) {
    t << " [";
    for (std::size_t i = 0; i < row.size(); ++i) t << (i ? " " : "") << row[i];
    t << "]";
  }
  t << "\npositive roots: " << d.positive_roots().size() << "\nmarks:";
  for (auto m : d.marks()) t << " " << m;
  t << "\ncoxeter number: " << d.coxeter_number() << "\n";
  return {to_json(d), t.str(), std::nullopt};
}

Result weyl_word(const Options& o) {
  const auto g = make_group(o);
  require_nonempty(o.word, "--word");
  const auto p = parse_parabolic(o.parabolic);
  const auto w = element_arg(g, o.word, "--word");
  const auto rep = g.min_coset_rep(w, p);
  json j = element_to_json(g, w);
  j["input"] = word_arg(o.word, "--word");
  j["length"] = g.length(w);
  j["right_descents"] = g.right_descents(w);
  j["left_descents"] = g.left_descents(w);
  j["parabolic"] = p.members();
  j["min_rep"] = {{"word", g.reduced_word(rep)}, {"length", g.length(rep)}};
  return {j, word_to_string(g.reduced_word(w)) + " (length " + std::to_string(g.length(w)) + ")\n", std::nullopt};
}

Result bruhat_leq_cmd(const Options& o) {
  const auto g = make_group(o);
  require_nonempty(o.mu, "--mu");
  require_nonempty(o.lambda, "--lambda");
  const auto p = parse_parabolic(o.parabolic);
  const auto mu = element_arg(g, o.mu, "--mu");
  const auto lambda = element_arg(g, o.lambda, "--lambda");
  const auto r = bruhat_leq(g, mu, lambda, p);
  json j = {{"parabolic", p.members()},
            {"mu", g.reduced_word(g.min_coset_rep(mu, p))},
            {"lambda", g.reduced_word(g.min_coset_rep(lambda, p))},
            {"leq", r.leq},
            {"normalized", r.normalized}};
  return {j, std::string(r.leq ? "true" : "false") + "\n", r.leq};
}

BruhatIdeal ideal_arg(const AffineWeylGroup& g, const Options& o, const ParabolicSubset& p) {
  require_nonempty(o.generators, "--generators");
  const auto gens = elements_arg(g, o.generators, "--generators");
  if (o.direction == "lower") return lower_ideal(g, gens, p);
  if (o.direction == "upper") return upper_ideal(g, gens, p, require(o.max_length, "--max-length"));
  throw UsageError("--direction must be lower or upper");
}

Result bruhat_ideal(const Options& o) {
  const auto g = make_group(o);
  const auto p = parse_parabolic(o.parabolic);
  const auto ideal = ideal_arg(g, o, p);
  return {ideal_to_json(g, ideal), text_lines(g, ideal.elements), std::nullopt};
}

Result bruhat_hasse(const Options& o) {
  const auto g = make_group(o);
  const auto p = parse_parabolic(o.parabolic);
  const auto vertices =
      o.generators.empty() ? g.enumerate_min_reps(p, require(o.max_length, "--max-length or --generators"))
                           : ideal_arg(g, o, p).elements;
  const auto h = hasse(g, vertices, p);
  std::string text;
  if (o.format == "dot") {
    text = hasse_to_dot(g, h, p);
  } else {
    for (auto [hi, lo] : h.edges)
      text += word_to_string(g.reduced_word(h.vertices[hi])) + " > " + word_to_string(g.reduced_word(h.vertices[lo])) + "\n";
  }
  return {hasse_to_json(g, h, p), text, std::nullopt};
}

Result flow_validate(const Options& o) {
  const auto g = make_group(o);
  const auto phi = flow_arg(o, g.datum());
  const auto r = validate_flow(phi, g.datum());
  json j = to_json(r);
  j["flow"] = flow_json(phi);
  std::string t = std::string(r.valid() ? "valid" : "invalid") + " (a: " + (r.condition_a ? "yes" : "no") +
                  ", b: " + (r.condition_b ? "yes" : "no") + ", max |alpha(gamma)| = " +
                  std::to_string(r.max_abs_pairing) + ")\n";
  return {j, t, r.valid(), true};
}

Result flow_weights(const Options& o) {
  const auto g = make_group(o);
  require_nonempty(o.word, "--word");
  const auto p = parse_parabolic(o.parabolic);
  const auto phi = flow_arg(o, g.datum());
  const auto lambda = element_arg(g, o.word, "--word");
  json inv = json::array();
  for (const auto& theta : inversion_set(g, lambda, p)) inv.push_back(affine_root_to_json(theta));
  const auto w = cell_weights(g, lambda, p, phi);
  const auto opp = opposite_cell_weights(g, lambda, p, phi);
  json j = {{"parabolic", p.members()}, {"word", g.reduced_word(lambda)}, {"flow", flow_json(phi)},
            {"inversion_set", inv},     {"weights", w},                   {"opposite_weights", opp}};
  std::string t = "weights:";
  for (auto x : w) t += " " + std::to_string(x);
  t += "\nopposite:";
  for (auto x : opp) t += " " + std::to_string(x);
  return {j, t + "\n", std::nullopt};
}

Result gkm_build(const Options& o) {
  const auto g = make_group(o);
  const auto p = parse_parabolic(o.parabolic);
  const int t = require(o.max_length, "--max-length");
  const auto graph = build_gkm_graph(g, g.enumerate_min_reps(p, t), p, require(o.level_bound, "--level-bound"), t);
  std::string text = std::to_string(graph.vertices.size()) + " vertices, " + std::to_string(graph.edges.size()) + " edges\n";
  return {to_json(graph), text, std::nullopt};
}

Result gkm_check(const Options& o) {
  require_nonempty(o.graph_path, "--graph");
  const json gj = read_json_file(o.graph_path);
  Options go = o;
  try {
    go.type = gj.at("type").get<std::string>();
    go.rank = gj.at("rank").get<int>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("graph JSON lacks type or rank: ") + e.what());
  }
  const auto g = make_group(go);
  GkmGraph graph;
  try {
    graph = graph_from_json(g, gj);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed graph JSON: ") + e.what());
  }

  const int sources = !o.function_path.empty() + o.constant.has_value() + !o.character.empty();
  if (sources != 1) throw UsageError("give exactly one of --function, --constant, --character");
  EquivariantFunction f;
  if (!o.function_path.empty()) {
    try {
      f = function_from_json(read_json_file(o.function_path), graph.num_vars());
    } catch (const json::exception& e) {
      throw DomainError(std::string("malformed function JSON: ") + e.what());
    }
  } else if (o.constant) {
    f = constant_function(graph, Rational(*o.constant));
  } else {
    f = symmetrized_class(graph, parse_ints(o.character, "--character"), o.power);
  }
  if (o.divisibility != "rational" && o.divisibility != "integral")
    throw UsageError("--divisibility must be rational or integral");
  const auto mode = o.divisibility == "integral" ? Divisibility::integral : Divisibility::rational;
  const auto r = check_membership(f, graph, mode);
  json violations = json::array();
  for (auto e : r.violations)
    violations.push_back({{"edge", e}, {"src", graph.edges[e].src}, {"dst", graph.edges[e].dst}});
  json j = {{"member", r.member}, {"divisibility", o.divisibility}, {"level_bound", graph.level_bound},
            {"violations", violations}};
  std::string t = r.member ? "member\n" : "not a member (" + std::to_string(r.violations.size()) + " violating edges)\n";
  return {j, t, r.member};
}

Result gkm_witnesses(const Options& o) {
  const auto g = make_group(o);
  const auto p = parse_parabolic(o.parabolic);
  require_nonempty(o.sigma, "--sigma");
  require_nonempty(o.generators, "--generators");
  const auto upper =
      upper_ideal(g, elements_arg(g, o.generators, "--generators"), p, require(o.max_length, "--max-length"));
  const auto r =
      injectivity_witnesses(g, element_arg(g, o.sigma, "--sigma"), upper, o.want, require(o.level_bound, "--level-bound"));
  json j = to_json(g, r);
  j["parabolic"] = p.members();
  j["sigma"] = g.reduced_word(g.min_coset_rep(element_arg(g, o.sigma, "--sigma"), p));
  std::string t;
  for (const auto& w : r.witnesses) t += word_to_string(g.reduced_word(w.target)) + "\n";
  t += std::to_string(r.found()) + " of " + std::to_string(r.requested) + " found\n";
  return {j, t, r.found() >= r.requested};
}

Result series_result(const GradedSeries& s, json extra = json::object()) {
  extra["series"] = to_json(s);
  return {extra, s.to_text() + "\n", std::nullopt};
}

Result poincare_flag_cmd(const Options& o) {
  const auto g = make_group(o);
  return series_result(poincare_flag(g, parse_parabolic(o.parabolic), require(o.cap, "--cap")));
}

Result poincare_lower_cmd(const Options& o) {
  const auto g = make_group(o);
  Options lo = o;
  lo.direction = "lower";
  return series_result(poincare_lower(g, ideal_arg(g, lo, parse_parabolic(o.parabolic))));
}

Result poincare_pair_cmd(const Options& o) {
  const auto g = make_group(o);
  Options up = o;
  up.direction = "upper";
  return series_result(poincare_pair(g, ideal_arg(g, up, parse_parabolic(o.parabolic))));
}

Result poincare_betti_cmd(const Options& o) {
  const auto g = make_group(o);
  Options up = o;
  up.direction = "upper";
  const auto b = betti_birkhoff(g, ideal_arg(g, up, parse_parabolic(o.parabolic)), require(o.cap, "--cap"));
  return series_result(b.series, {{"provenance", b.provenance}});
}

Result poincare_pinf_cmd(const Options& o) {
  const auto s = pinf_toy(o.n, o.m);
  if (!s) return {{{"empty", true}, {"series", nullptr}}, "empty\n", std::nullopt};
  auto r = series_result(*s);
  r.body["empty"] = false;
  return r;
}

Result richardson_cmd(const Options& o) {
  const auto g = make_group(o);
  require_nonempty(o.lambda, "--lambda");
  require_nonempty(o.mu, "--mu");
  const auto p = parse_parabolic(o.parabolic);
  const auto d = richardson_codim(g, element_arg(g, o.lambda, "--lambda"), element_arg(g, o.mu, "--mu"), p);
  json j = {{"parabolic", p.members()}, {"codimension", d.codimension}, {"dimension", d.dimension}};
  return {j, "codim " + std::to_string(d.codimension) + ", dim " + std::to_string(d.dimension) + "\n", std::nullopt};
}

Result interval_cmd(const Options& o) {
  const auto g = make_group(o);
  require_nonempty(o.lambda, "--lambda");
  require_nonempty(o.mu, "--mu");
  const auto p = parse_parabolic(o.parabolic);
  const auto upper = upper_ideal(g, elements_arg(g, o.lambda, "--lambda"), p, require(o.max_length, "--max-length"));
  const auto lower = lower_ideal(g, elements_arg(g, o.mu, "--mu"), p);
  const auto r = interval_connected(g, upper, lower);
  json j = {{"parabolic", p.members()},      {"status", to_string(r.status)},
            {"vertex_count", r.vertex_count}, {"edge_count", r.edge_count},
            {"component_count", r.component_count}};
  return {j, to_string(r.status) + "\n", r.status == Connectivity::connected};
}

// ---- config merge ----

// Inserts the keys of a --config JSON object as flags right after the
// subcommand path; explicit flags come later on the line and win.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  const json cfg = read_json_file(path);
  if (!cfg.is_object()) throw UsageError("--config must hold a JSON object");
  std::vector<std::string> injected;
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) injected.push_back(flag);
    } else if (value.is_string()) {
      injected.push_back(flag + "=" + value.get<std::string>());
    } else if (value.is_number_integer()) {
      injected.push_back(flag + "=" + std::to_string(value.get<std::int64_t>()));
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& x : value) {
        if (!joined.empty()) joined += ",";
        joined += x.is_string() ? x.get<std::string>() : x.dump();
      }
      injected.push_back(flag + "=" + joined);
    } else {
      throw UsageError("unsupported config value for " + key);
    }
  }
  // args[0] is the program; the next two tokens name the subcommand.
  const std::size_t at = std::min<std::size_t>(3, args.size());
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), injected.begin(), injected.end());
  return args;
}

void print_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"version", BIRKHOFF_VERSION}, {"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Affine Weyl groups, Bruhat order, flows, GKM graphs and Poincare series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", BIRKHOFF_VERSION);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::function<Result(const Options&)> handler;
  std::string command;
  bool json_lines = false;

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help, auto fn,
                  std::vector<std::string> formats = {"json", "text"}) {
    auto* sub = group->add_subcommand(name, help);
    sub->add_option("--type", o.type, "Root system type: A, B, C or D")->capture_default_str();
    sub->add_option("--rank", o.rank, "Rank of the finite root system")->capture_default_str();
    sub->add_option("--parabolic", o.parabolic, "Parabolic subset: none or a list like 1,2")->capture_default_str();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_flag("--strict-exit", o.strict_exit, "Exit 0/1 for true/false on boolean queries");
    sub->add_option("--config", o.config, "JSON file of default flags");
    sub->callback([&, fn, full = group->get_name() + " " + name] {
      handler = fn;
      command = full;
    });
    return sub;
  };

  auto* roots = app.add_subcommand("roots", "Finite root data")->require_subcommand(1);
  leaf(roots, "show", "Cartan matrix, positive roots and marks", roots_show);

  auto* weyl = app.add_subcommand("weyl", "Affine Weyl group elements")->require_subcommand(1);
  auto* enumerate = leaf(weyl, "enumerate", "Minimal coset representatives up to a length (JSON lines)", [](const Options&) {
    return Result{};
  });
  enumerate->add_option("--max-length", o.max_length, "Largest length to enumerate")->required();
  enumerate->callback([&] {
    json_lines = true;
    command = "weyl enumerate";
  });
  leaf(weyl, "word", "Reduced word, length and matrix of an element", weyl_word)
      ->add_option("--word", o.word, "Element as comma-separated generator indices")
      ->required();

  auto* bruhat = app.add_subcommand("bruhat", "Bruhat order")->require_subcommand(1);
  auto* leq = leaf(bruhat, "leq", "Test mu <= lambda", bruhat_leq_cmd);
  leq->add_option("--mu", o.mu)->required();
  leq->add_option("--lambda", o.lambda)->required();
  auto* ideal = leaf(bruhat, "ideal", "Order ideal generated by elements", bruhat_ideal);
  ideal->add_option("--generators", o.generators, "Words separated by ';'")->required();
  ideal->add_option("--direction", o.direction)->check(CLI::IsMember({"lower", "upper"}))->capture_default_str();
  ideal->add_option("--max-length", o.max_length, "Truncation length of an upper ideal");
  auto* hasse_cmd = leaf(bruhat, "hasse", "Hasse diagram of an ideal or a length ball", bruhat_hasse, {"json", "text", "dot"});
  hasse_cmd->add_option("--generators", o.generators, "Words separated by ';'");
  hasse_cmd->add_option("--direction", o.direction)->check(CLI::IsMember({"lower", "upper"}))->capture_default_str();
  hasse_cmd->add_option("--max-length", o.max_length);

  auto* flow = app.add_subcommand("flow", "Attracting flows")->require_subcommand(1);
  auto add_flow = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Loop rotation part");
    sub->add_option("--gamma", o.gamma, "Coroot coordinates, comma-separated");
    sub->add_flag("--canonical", o.canonical, "Use (2h-1, -2 rho^vee)");
  };
  add_flow(leaf(flow, "validate", "Check conditions (a) and (b)", flow_validate));
  auto* weights = leaf(flow, "weights", "Inversion set and flow weights of a cell", flow_weights);
  add_flow(weights);
  weights->add_option("--word", o.word)->required();

  auto* gkm = app.add_subcommand("gkm", "GKM graphs")->require_subcommand(1);
  auto* build = leaf(gkm, "build", "Fixed-point graph of a truncation", gkm_build);
  build->add_option("--max-length", o.max_length)->required();
  build->add_option("--level-bound", o.level_bound)->required();
  auto* check = leaf(gkm, "check", "GKM membership of a function on a graph", gkm_check);
  check->add_option("--graph", o.graph_path, "Graph JSON from gkm build")->required();
  check->add_option("--function", o.function_path, "Function JSON");
  check->add_option("--constant", o.constant, "Constant function");
  check->add_option("--character", o.character, "Class of a character in the (delta, alpha) basis");
  check->add_option("--power", o.power, "Power for --character")->capture_default_str();
  check->add_option("--divisibility", o.divisibility)->check(CLI::IsMember({"rational", "integral"}))->capture_default_str();
  auto* wit = leaf(gkm, "witnesses", "Injectivity witnesses for sigma outside an upper ideal", gkm_witnesses);
  wit->add_option("--sigma", o.sigma)->required();
  wit->add_option("--generators", o.generators, "Upper ideal generators separated by ';'")->required();
  wit->add_option("--max-length", o.max_length, "Truncation length")->required();
  wit->add_option("--level-bound", o.level_bound)->required();
  wit->add_option("--want", o.want)->capture_default_str();

  auto* poincare = app.add_subcommand("poincare", "Poincare series")->require_subcommand(1);
  leaf(poincare, "flag", "Cells of the flag variety", poincare_flag_cmd)->add_option("--cap", o.cap)->required();
  leaf(poincare, "lower", "Schubert union of a lower ideal", poincare_lower_cmd)
      ->add_option("--generators", o.generators)
      ->required();
  auto* pair = leaf(poincare, "pair", "Relative homology of an upper ideal", poincare_pair_cmd);
  pair->add_option("--generators", o.generators)->required();
  pair->add_option("--max-length", o.max_length)->required();
  auto* betti = leaf(poincare, "betti", "Betti numbers of a Birkhoff union", poincare_betti_cmd);
  betti->add_option("--generators", o.generators)->required();
  betti->add_option("--max-length", o.max_length)->required();
  betti->add_option("--cap", o.cap)->required();
  auto* pinf = leaf(poincare, "pinf", "Z_n meeting P^m", poincare_pinf_cmd);
  pinf->add_option("--n", o.n)->required();
  pinf->add_option("--m", o.m)->required();

  auto* rich = app.add_subcommand("richardson", "Richardson intersections")->require_subcommand(1);
  auto* codim = leaf(rich, "codim", "Codimension and dimension of Z_lambda in X_mu", richardson_cmd);
  codim->add_option("--lambda", o.lambda)->required();
  codim->add_option("--mu", o.mu)->required();

  auto* interval = app.add_subcommand("interval", "Intervals in the Bruhat order")->require_subcommand(1);
  auto* conn = leaf(interval, "connected", "Hasse connectivity of upper(lambda) meet lower(mu)", interval_cmd);
  conn->add_option("--lambda", o.lambda, "Upper ideal generators")->required();
  conn->add_option("--mu", o.mu, "Lower ideal generators")->required();
  conn->add_option("--max-length", o.max_length, "Truncation length of the upper ideal")->required();

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = merge_config(std::move(args));
  } catch (const UsageError& e) {
    print_error("usage", e.what());
    return exit_usage;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (json_lines) {
      const auto g = make_group(o);
      const auto p = parse_parabolic(o.parabolic);
      const auto reps = g.enumerate_min_reps(p, *o.max_length);
      for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto w = g.reduced_word(reps[i]);
        if (o.format == "text")
          std::cout << word_to_string(w) << " " << w.size() << "\n";
        else
          std::cout << stamped(command, {{"index", i}, {"word", w}, {"length", w.size()}}).dump() << "\n";
      }
      return 0;
    }
    const Result r = handler(o);
    if (o.format == "json")
      std::cout << stamped(command, r.body).dump(2) << "\n";
    else
      std::cout << r.text;
    if ((o.strict_exit || r.exit_by_truth) && r.truth) return *r.truth ? 0 : exit_domain;
    return 0;
  } catch (const UsageError& e) {
    print_error("usage", e.what());
    return exit_usage;
  } catch (const DomainError& e) {
    print_error("domain", e.what());
    return exit_domain;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return exit_domain;
  }
}
