#include "birkhoff/affine_weyl.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace birkhoff {

bool is_positive(const AffineRoot& theta) {
  if (theta.level == 0 && theta.finite.is_zero()) throw DomainError("(0, 0) is not an affine root");
  if (theta.level > 0) return true;
  if (theta.level < 0) return false;
  return theta.finite.is_negative();
}

AffineWeylElement::AffineWeylElement(std::size_t dim) : dim_(dim), m_(dim * dim, 0) {
  for (std::size_t i = 0; i < dim; ++i) m_[i * dim + i] = 1;
}

AffineWeylElement::AffineWeylElement(std::size_t dim, std::vector<std::int64_t> entries)
    : dim_(dim), m_(std::move(entries)) {
  if (m_.size() != dim * dim) throw DomainError("matrix entry count does not match dimension");
}

bool AffineWeylElement::is_identity() const { return *this == AffineWeylElement(dim_); }

std::vector<std::int64_t> AffineWeylElement::apply(const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> out(dim_, 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < dim_; ++c) s += m_[r * dim_ + c] * v[c];
    out[r] = s;
  }
  return out;
}

AffineRoot AffineWeylElement::apply(const AffineRoot& theta) const {
  std::vector<std::int64_t> v(dim_);
  v[0] = theta.level;
  std::copy(theta.finite.coords.begin(), theta.finite.coords.end(), v.begin() + 1);
  auto w = apply(v);
  return {w[0], RootVector{std::vector<std::int64_t>(w.begin() + 1, w.end())}};
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& o) const {
  AffineWeylElement r(dim_, std::vector<std::int64_t>(dim_ * dim_, 0));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto a = m_[i * dim_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) r.m_[i * dim_ + j] += a * o.m_[k * dim_ + j];
    }
  return r;
}

std::vector<std::vector<std::int64_t>> AffineWeylElement::rows() const {
  std::vector<std::vector<std::int64_t>> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    out[r].assign(m_.begin() + static_cast<long>(r * dim_), m_.begin() + static_cast<long>((r + 1) * dim_));
  return out;
}

std::size_t AffineWeylElementHash::operator()(const AffineWeylElement& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : w.entries()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ParabolicSubset::ParabolicSubset(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ParabolicSubset ParabolicSubset::finite(int rank) {
  std::vector<int> m;
  for (int i = 1; i <= rank; ++i) m.push_back(i);
  return ParabolicSubset(std::move(m));
}

bool ParabolicSubset::contains(int i) const { return std::binary_search(members_.begin(), members_.end(), i); }

std::string ParabolicSubset::to_string() const {
  if (members_.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members_[i]);
  }
  return s;
}

AffineWeylGroup::AffineWeylGroup(CartanDatum datum) : datum_(std::move(datum)) {
  simple_roots_.push_back({1, datum_.highest_root()});
  for (int s = 0; s < datum_.rank(); ++s) simple_roots_.push_back({0, -datum_.simple_root(s)});
  for (const auto& r : simple_roots_) generators_.push_back(reflection(r));
}

bool AffineWeylGroup::is_root(const AffineRoot& theta) const {
  if (theta.finite.rank() != static_cast<std::size_t>(rank())) return false;
  if (theta.finite.is_zero()) return theta.level != 0;
  return datum_.is_root(theta.finite);
}

AffineWeylElement AffineWeylGroup::reflection(const AffineRoot& theta) const {
  if (theta.finite.rank() != static_cast<std::size_t>(rank())) throw DomainError("affine root has wrong rank");
  if (!theta.is_real()) throw DomainError("reflection requires a real affine root");
  const auto coroot = datum_.coroot_of(theta.finite);
  const std::size_t n = dim();
  AffineWeylElement r(n);
  std::vector<std::int64_t> m = r.entries();
  // (m, beta) -> (m - n <beta, alpha^vee>, beta - <beta, alpha^vee> alpha)
  for (std::size_t i = 1; i < n; ++i) {
    const auto p = datum_.pairing(datum_.simple_root(static_cast<int>(i - 1)), coroot);
    m[0 * n + i] = -theta.level * p;
    for (std::size_t k = 1; k < n; ++k) m[k * n + i] -= p * theta.finite.coords[k - 1];
  }
  return AffineWeylElement(n, std::move(m));
}

AffineWeylElement AffineWeylGroup::invert(const AffineWeylElement& w) const {
  auto word = reduced_word(w);
  std::reverse(word.begin(), word.end());
  return from_word(word);
}

AffineWeylElement AffineWeylGroup::from_word(const Word& word) const {
  AffineWeylElement w = identity();
  for (int i : word) {
    if (i < 0 || i >= num_generators())
      throw DomainError("generator index " + std::to_string(i) + " out of range for " + datum_.name());
    w = w * generators_[static_cast<std::size_t>(i)];
  }
  return w;
}

bool AffineWeylGroup::is_right_descent(const AffineWeylElement& w, int i) const {
  return !is_positive(w.apply(simple_roots_.at(static_cast<std::size_t>(i))));
}

bool AffineWeylGroup::is_left_descent(const AffineWeylElement& w, int i) const {
  return length(generator(i) * w) < length(w);
}

std::vector<int> AffineWeylGroup::right_descents(const AffineWeylElement& w) const {
  std::vector<int> out;
  for (int i = 0; i < num_generators(); ++i)
    if (is_right_descent(w, i)) out.push_back(i);
  return out;
}

std::vector<int> AffineWeylGroup::left_descents(const AffineWeylElement& w) const {
  return right_descents(invert(w));
}

Word AffineWeylGroup::reduced_word(const AffineWeylElement& w) const {
  Word stripped;
  AffineWeylElement cur = w;
  while (true) {
    int found = -1;
    for (int i = 0; i < num_generators(); ++i) {
      if (is_right_descent(cur, i)) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    stripped.push_back(found);
    cur = cur * generators_[static_cast<std::size_t>(found)];
  }
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

int AffineWeylGroup::length(const AffineWeylElement& w) const {
  return static_cast<int>(reduced_word(w).size());
}

void AffineWeylGroup::check_parabolic(const ParabolicSubset& parabolic) const {
  for (int i : parabolic.members())
    if (i < 0 || i >= num_generators())
      throw DomainError("parabolic index " + std::to_string(i) + " out of range for " + datum_.name());
  if (static_cast<int>(parabolic.members().size()) == num_generators())
    throw DomainError("parabolic subset containing every affine generator generates an infinite group; "
                      "minimal coset representatives are not defined");
}

AffineWeylElement AffineWeylGroup::min_coset_rep(const AffineWeylElement& w, const ParabolicSubset& parabolic) const {
  check_parabolic(parabolic);
  AffineWeylElement cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : parabolic.members()) {
      if (is_right_descent(cur, i)) {
        cur = cur * generators_[static_cast<std::size_t>(i)];
        changed = true;
        break;
      }
    }
  }
  return cur;
}

int AffineWeylGroup::parabolic_length(const AffineWeylElement& w, const ParabolicSubset& parabolic) const {
  return length(min_coset_rep(w, parabolic));
}

bool AffineWeylGroup::is_min_rep(const AffineWeylElement& w, const ParabolicSubset& parabolic) const {
  return std::none_of(parabolic.members().begin(), parabolic.members().end(),
                      [&](int i) { return is_right_descent(w, i); });
}

std::vector<AffineWeylElement> AffineWeylGroup::enumerate_min_reps(const ParabolicSubset& parabolic,
                                                                   int max_length) const {
  check_parabolic(parabolic);
  if (max_length < 0) throw DomainError("max_length must be nonnegative");
  struct Item {
    AffineWeylElement w;
    Word word;
  };
  std::vector<Item> all{{identity(), {}}};
  std::vector<AffineWeylElement> frontier{identity()};
  for (int len = 1; len <= max_length; ++len) {
    std::unordered_set<AffineWeylElement, AffineWeylElementHash> next_set;
    std::vector<AffineWeylElement> next;
    for (const auto& v : frontier) {
      for (int i = 0; i < num_generators(); ++i) {
        AffineWeylElement u = generators_[static_cast<std::size_t>(i)] * v;
        if (!is_min_rep(u, parabolic)) continue;
        if (next_set.count(u)) continue;
        Word word = reduced_word(u);
        if (static_cast<int>(word.size()) != len) continue;
        next_set.insert(u);
        next.push_back(u);
        all.push_back({u, std::move(word)});
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Item& a, const Item& b) { return word_less(a.word, b.word); });
  std::vector<AffineWeylElement> out;
  out.reserve(all.size());
  for (auto& it : all) out.push_back(std::move(it.w));
  return out;
}

std::vector<AffineRoot> AffineWeylGroup::positive_real_roots(int max_level) const {
  std::vector<AffineRoot> out;
  if (max_level < 0) return out;
  for (const auto& b : datum_.positive_roots()) out.push_back({0, -b});
  for (std::int64_t n = 1; n <= max_level; ++n) {
    for (const auto& b : datum_.positive_roots()) out.push_back({n, b});
    for (const auto& b : datum_.positive_roots()) out.push_back({n, -b});
  }
  return out;
}

std::vector<AffineRoot> AffineWeylGroup::inversion_set(const AffineWeylElement& w) const {
  const Word word = reduced_word(w);
  std::vector<AffineRoot> out;
  AffineWeylElement prefix = identity();
  for (int i : word) {
    out.push_back(prefix.apply(simple_roots_[static_cast<std::size_t>(i)]));
    prefix = prefix * generators_[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

Word parse_word(const std::string& text) {
  Word w;
  if (text.empty() || text == "e") return w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw DomainError("empty generator index in word '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw DomainError("bad generator index '" + tok + "' in word '" + text + "'");
    }
    if (used != tok.size() || v < 0) throw DomainError("bad generator index '" + tok + "' in word '" + text + "'");
    w.push_back(v);
  }
  return w;
}

nlohmann::json element_to_json(const AffineWeylGroup& g, const AffineWeylElement& w) {
  return {{"word", g.reduced_word(w)}, {"matrix", w.rows()}};
}

nlohmann::json affine_root_to_json(const AffineRoot& theta) {
  return {{"level", theta.level}, {"finite", theta.finite.coords}};
}

}  // namespace birkhoff
