#include "birkhoff/polynomial.hpp"

#include <limits>
#include <sstream>

#include "birkhoff/error.hpp"

namespace birkhoff {

namespace mp = boost::multiprecision;

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw DomainError("variable index out of range");
  Polynomial p(num_vars);
  Monomial m(num_vars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::linear(const std::vector<Rational>& coeffs, const Rational& offset) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  p.add_term(Monomial(coeffs.size(), 0), offset);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != num_vars_) throw DomainError("monomial has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (o.num_vars_ != num_vars_) throw DomainError("polynomials over different variable sets");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(num_vars_);
  Monomial m(num_vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < num_vars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(num_vars_);
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(num_vars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(std::size_t index, const Polynomial& value) const {
  check_compatible(value);
  if (index >= num_vars_) throw DomainError("variable index out of range");
  std::vector<Polynomial> powers{constant(num_vars_, 1)};
  Polynomial r(num_vars_);
  for (const auto& [m, c] : terms_) {
    const auto e = static_cast<std::size_t>(m[index]);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Polynomial rest(num_vars_);
    Monomial stripped = m;
    stripped[index] = 0;
    rest.add_term(stripped, c);
    r = r + rest * powers[e];
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = mp::abs(c);
    bool has_var = false;
    for (int e : m) has_var = has_var || e > 0;
    if (a != 1 || !has_var) os << a;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << "x" << i;
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

namespace {

// Index of the lex-leading variable of a degree-one polynomial.
std::size_t leading_variable(const Polynomial& form) {
  if (form.degree() != 1) throw DomainError("divisor must have degree exactly 1 with a nonzero linear part");
  for (std::size_t i = 0; i < form.num_vars(); ++i) {
    Monomial m(form.num_vars(), 0);
    m[i] = 1;
    if (form.coefficient(m) != 0) return i;
  }
  throw DomainError("divisor has no linear part");
}

}  // namespace

bool divides_linear(const Polynomial& form, const Polynomial& p) {
  if (form.num_vars() != p.num_vars()) throw DomainError("polynomials over different variable sets");
  const std::size_t k = leading_variable(form);
  Monomial mk(form.num_vars(), 0);
  mk[k] = 1;
  const Rational ck = form.coefficient(mk);
  // x_k = -(form - c_k x_k) / c_k
  Polynomial rest = form - Polynomial::variable(form.num_vars(), k) * ck;
  Polynomial solution = rest * Rational(-1 / ck);
  return p.substitute(k, solution).is_zero();
}

LinearDivision divide_by_linear(const Polynomial& form, const Polynomial& p) {
  if (form.num_vars() != p.num_vars()) throw DomainError("polynomials over different variable sets");
  const std::size_t k = leading_variable(form);
  Monomial mk(form.num_vars(), 0);
  mk[k] = 1;
  const Rational ck = form.coefficient(mk);
  LinearDivision out{Polynomial(p.num_vars()), Polynomial(p.num_vars())};
  Polynomial work = p;
  while (!work.is_zero()) {
    const auto lead = *work.terms().rbegin();
    if (lead.first[k] >= 1) {
      Monomial shifted = lead.first;
      shifted[k] -= 1;
      Polynomial t(p.num_vars());
      t.add_term(shifted, lead.second / ck);
      out.quotient = out.quotient + t;
      work = work - t * form;
    } else {
      Polynomial t(p.num_vars());
      t.add_term(lead.first, lead.second);
      out.remainder = out.remainder + t;
      work = work - t;
    }
  }
  return out;
}

bool divides_linear_integral(const Polynomial& form, const Polynomial& p) {
  const auto d = divide_by_linear(form, p);
  if (!d.remainder.is_zero()) return false;
  for (const auto& [m, c] : d.quotient.terms())
    if (!is_integral(c)) return false;
  return true;
}

namespace {

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw DomainError("coefficient does not fit in a 64-bit integer");
  return static_cast<std::int64_t>(v);
}

}  // namespace

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"exps", m}, {"num", to_int64(mp::numerator(c))}, {"den", to_int64(mp::denominator(c))}});
  return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t num_vars) {
  if (!j.is_array()) throw DomainError("polynomial must be a JSON array of terms");
  Polynomial p(num_vars);
  for (const auto& term : j) {
    auto exps = term.at("exps").get<Monomial>();
    if (exps.size() != num_vars)
      throw DomainError("term has " + std::to_string(exps.size()) + " exponents, expected " + std::to_string(num_vars));
    for (int e : exps)
      if (e < 0) throw DomainError("negative exponent");
    const auto num = term.at("num").get<std::int64_t>();
    const auto den = term.contains("den") ? term.at("den").get<std::int64_t>() : std::int64_t{1};
    if (den == 0) throw DomainError("zero denominator");
    p.add_term(exps, Rational(Integer(num), Integer(den)));
  }
  return p;
}

}  // namespace birkhoff
