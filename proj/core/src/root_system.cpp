#include "birkhoff/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "birkhoff/rational.hpp"

namespace birkhoff {

char to_char(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

RootType root_type_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return RootType::A;
    case 'B': case 'b': return RootType::B;
    case 'C': case 'c': return RootType::C;
    case 'D': case 'd': return RootType::D;
    default: break;
  }
  throw DomainError(std::string("unsupported root type '") + c + "' (expected A, B, C or D)");
}

bool RootVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

bool RootVector::is_positive() const {
  return !is_zero() && std::all_of(coords.begin(), coords.end(), [](auto c) { return c >= 0; });
}

bool RootVector::is_negative() const {
  return !is_zero() && std::all_of(coords.begin(), coords.end(), [](auto c) { return c <= 0; });
}

std::int64_t RootVector::height() const { return std::accumulate(coords.begin(), coords.end(), std::int64_t{0}); }

RootVector RootVector::operator-() const { return scaled(-1); }

RootVector RootVector::operator+(const RootVector& o) const {
  RootVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

RootVector RootVector::operator-(const RootVector& o) const { return *this + (-o); }

RootVector RootVector::scaled(std::int64_t c) const {
  RootVector r = *this;
  for (auto& x : r.coords) x *= c;
  return r;
}

CorootVector CorootVector::operator-() const { return scaled(-1); }

CorootVector CorootVector::operator+(const CorootVector& o) const {
  CorootVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

CorootVector CorootVector::scaled(std::int64_t c) const {
  CorootVector r = *this;
  for (auto& x : r.coords) x *= c;
  return r;
}

CartanDatum CartanDatum::build(RootType type, int rank) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  if (rank > 8) throw DomainError("rank above 8 is not supported");
  if ((type == RootType::B || type == RootType::C) && rank < 2)
    throw DomainError(std::string("type ") + to_char(type) + " requires rank >= 2");
  if (type == RootType::D && rank < 4) throw DomainError("type D requires rank >= 4");

  CartanDatum d;
  d.type_ = type;
  d.rank_ = rank;
  const auto n = static_cast<std::size_t>(rank);
  d.cartan_.assign(n, std::vector<std::int64_t>(n, 0));
  auto& a = d.cartan_;
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  // Bourbaki numbering; chain 1 - 2 - ... - n.
  const std::size_t chain_end = (type == RootType::D) ? n - 1 : n;
  for (std::size_t i = 0; i + 1 < chain_end; ++i) {
    a[i][i + 1] = -1;
    a[i + 1][i] = -1;
  }
  switch (type) {
    case RootType::A:
      break;
    case RootType::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      a[n - 2][n - 1] = -2;
      break;
    case RootType::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
      a[n - 1][n - 2] = -2;
      break;
    case RootType::D:
      a[n - 3][n - 1] = -1;
      a[n - 1][n - 3] = -1;
      break;
  }
  d.close_roots();
  return d;
}

void CartanDatum::close_roots() {
  struct Entry {
    RootVector root;
    CorootVector coroot;
  };
  std::vector<Entry> found;
  std::set<RootVector> seen;
  for (int i = 0; i < rank_; ++i) {
    found.push_back({simple_root(i), simple_coroot(i)});
    seen.insert(simple_root(i));
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (int j = 0; j < rank_; ++j) {
      const Entry e = found[k];
      if (e.root == simple_root(j)) continue;
      RootVector r = reflect(j, e.root);
      if (!r.is_positive() || seen.count(r)) continue;
      // s_j on coroots: mu - alpha_j(mu) alpha_j^vee.
      CorootVector c = e.coroot;
      std::int64_t p = 0;
      for (int i = 0; i < rank_; ++i) p += cartan_[j][i] * e.coroot.coords[i];
      c.coords[j] -= p;
      seen.insert(r);
      found.push_back({std::move(r), std::move(c)});
    }
  }
  std::sort(found.begin(), found.end(), [](const Entry& x, const Entry& y) {
    if (x.root.height() != y.root.height()) return x.root.height() < y.root.height();
    return x.root.coords < y.root.coords;
  });
  positive_roots_.clear();
  positive_coroots_.clear();
  for (auto& e : found) {
    positive_roots_.push_back(std::move(e.root));
    positive_coroots_.push_back(std::move(e.coroot));
  }
}

int CartanDatum::coxeter_number() const {
  return 1 + static_cast<int>(std::accumulate(marks().begin(), marks().end(), std::int64_t{0}));
}

std::string CartanDatum::name() const { return std::string(1, to_char(type_)) + std::to_string(rank_); }

RootVector CartanDatum::simple_root(int i) const {
  RootVector r{std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0)};
  r.coords.at(static_cast<std::size_t>(i)) = 1;
  return r;
}

CorootVector CartanDatum::simple_coroot(int i) const {
  CorootVector r{std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0)};
  r.coords.at(static_cast<std::size_t>(i)) = 1;
  return r;
}

std::optional<std::size_t> CartanDatum::positive_index(const RootVector& beta) const {
  auto it = std::lower_bound(positive_roots_.begin(), positive_roots_.end(), beta,
                             [](const RootVector& x, const RootVector& y) {
                               if (x.height() != y.height()) return x.height() < y.height();
                               return x.coords < y.coords;
                             });
  if (it != positive_roots_.end() && *it == beta)
    return static_cast<std::size_t>(it - positive_roots_.begin());
  return std::nullopt;
}

bool CartanDatum::is_root(const RootVector& beta) const {
  if (beta.rank() != static_cast<std::size_t>(rank_)) return false;
  if (beta.is_positive()) return positive_index(beta).has_value();
  if (beta.is_negative()) return positive_index(-beta).has_value();
  return false;
}

CorootVector CartanDatum::coroot_of(const RootVector& beta) const {
  if (beta.rank() != static_cast<std::size_t>(rank_)) throw DomainError("root has wrong rank");
  if (beta.is_positive()) {
    if (auto i = positive_index(beta)) return positive_coroots_[*i];
  } else if (beta.is_negative()) {
    if (auto i = positive_index(-beta)) return -positive_coroots_[*i];
  }
  throw DomainError("vector is not a root of " + name());
}

std::int64_t CartanDatum::pairing(const RootVector& beta, const CorootVector& mu) const {
  const auto n = static_cast<std::size_t>(rank_);
  if (beta.rank() != n || mu.rank() != n)
    throw DomainError("pairing: dimension mismatch (expected rank " + std::to_string(rank_) + ")");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (beta.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) s += beta.coords[i] * mu.coords[j] * cartan_[i][j];
  }
  return s;
}

RootVector CartanDatum::reflect(int i, const RootVector& beta) const {
  std::int64_t p = 0;
  for (int k = 0; k < rank_; ++k) p += beta.coords[static_cast<std::size_t>(k)] * cartan_[k][i];
  RootVector r = beta;
  r.coords[static_cast<std::size_t>(i)] -= p;
  return r;
}

RootVector CartanDatum::reflect(const RootVector& alpha, const RootVector& beta) const {
  return beta - alpha.scaled(pairing(beta, coroot_of(alpha)));
}

CorootVector two_rho_coroot(const CartanDatum& d) {
  CorootVector sum{std::vector<std::int64_t>(static_cast<std::size_t>(d.rank()), 0)};
  for (const auto& c : d.positive_coroots()) sum = sum + c;
  if (sum != twice_fundamental_coweight_sum(d))
    throw std::logic_error("sum of positive coroots differs from twice the fundamental coweight sum");
  return sum;
}

CorootVector twice_fundamental_coweight_sum(const CartanDatum& d) {
  // omega_i^vee solves sum_k cartan[j][k] c_k = delta_ij; summing over i gives
  // cartan * c = (1, ..., 1).
  const auto n = static_cast<std::size_t>(d.rank());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m[j][k] = d.cartan()[j][k];
    m[j][n] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  CorootVector out{std::vector<std::int64_t>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const Rational v = 2 * m[i][n];
    if (!is_integral(v)) throw std::logic_error("2 rho^vee is not integral");
    out.coords[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
  }
  return out;
}

nlohmann::json to_json(const CartanDatum& d) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : d.positive_roots()) roots.push_back(r.coords);
  return {
      {"type", std::string(1, to_char(d.type()))},
      {"rank", d.rank()},
      {"cartan", d.cartan()},
      {"positive_roots", roots},
      {"highest_root", d.highest_root().coords},
      {"marks", d.marks()},
      {"coxeter_number", d.coxeter_number()},
  };
}

}  // namespace birkhoff
