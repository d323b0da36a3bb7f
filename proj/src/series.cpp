#include <algorithm>
#include <numeric>

#include "hurwitz/errors.hpp"
#include "hurwitz/scalar.hpp"

namespace hurwitz {
namespace {

int total_degree(const Series::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

Series Series::constant(const Rational& c, int order) {
  if (order < 0) throw ArgumentError("series truncation order must be nonnegative");
  Series s;
  s.order_ = order;
  if (c != 0) s.terms_.emplace(Exponents{}, c);
  return s;
}

Series Series::variable(const std::string& name, int order) {
  if (name.empty()) throw ArgumentError("series variable needs a name");
  Series s = constant(Rational(0), order);
  s.vars_ = {name};
  if (order >= 1) s.terms_.emplace(Exponents{1}, Rational(1));
  return s;
}

Rational Series::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::coefficient(const std::map<std::string, int>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, power] : monomial) {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      if (power != 0) return Rational(0);
      continue;
    }
    e[static_cast<std::size_t>(it - vars_.begin())] = power;
  }
  auto found = terms_.find(e);
  return found == terms_.end() ? Rational(0) : found->second;
}

int Series::degree() const {
  int out = -1;
  for (const auto& [e, c] : terms_) out = std::max(out, total_degree(e));
  return out;
}

void Series::adopt_variables(const std::vector<std::string>& vars) {
  std::vector<std::string> merged;
  std::set_union(vars_.begin(), vars_.end(), vars.begin(), vars.end(), std::back_inserter(merged));
  if (merged == vars_) return;
  std::vector<std::size_t> position(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    position[i] = static_cast<std::size_t>(std::find(merged.begin(), merged.end(), vars_[i]) - merged.begin());
  std::map<Exponents, Rational> remapped;
  for (auto& [e, c] : terms_) {
    Exponents wide(merged.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) wide[position[i]] = e[i];
    remapped.emplace(std::move(wide), c);
  }
  terms_ = std::move(remapped);
  vars_ = std::move(merged);
}

void Series::check_order(const Series& other) const {
  if (order_ != other.order_) throw ModeError("series with different truncation orders combined");
}

void Series::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Series& Series::operator+=(const Series& other) {
  check_order(other);
  Series rhs = other;
  adopt_variables(rhs.vars_);
  rhs.adopt_variables(vars_);
  for (const auto& [e, c] : rhs.terms_) terms_[e] += c;
  prune();
  return *this;
}

Series& Series::operator-=(const Series& other) { return *this += -other; }

Series& Series::operator*=(const Series& other) {
  check_order(other);
  Series rhs = other;
  adopt_variables(rhs.vars_);
  rhs.adopt_variables(vars_);
  std::map<Exponents, Rational> product;
  for (const auto& [ea, ca] : terms_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : rhs.terms_) {
      if (da + total_degree(eb) > order_) continue;
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      product[e] += ca * cb;
    }
  }
  terms_ = std::move(product);
  prune();
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Series Series::inverse() const {
  Rational c0 = constant_term();
  if (c0 == 0) throw PoleError("series without constant term is not invertible");
  // 1/(c0 (1 + t)) = c0^{-1} sum_k (-t)^k with t of positive valuation.
  Series t = *this;
  t *= Rational(1) / c0;
  t -= constant(Rational(1), order_);
  Series minus_t = -t;
  Series power = constant(Rational(1), order_);
  Series sum = power;
  for (int k = 1; k <= order_; ++k) {
    power *= minus_t;
    if (power.is_zero()) break;
    sum += power;
  }
  sum *= Rational(1) / c0;
  return sum;
}

Rational Series::evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<Rational> point;
  for (const auto& name : vars_) {
    auto it = values.find(name);
    if (it == values.end()) throw ArgumentError("no value for series variable " + name);
    point.push_back(it->second);
  }
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= p;
    }
    out += term;
  }
  return out;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0/1";
  // Lowest total degree first; ties broken by exponent order.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return total_degree(a.first) < total_degree(b.first); });
  std::string out;
  for (const auto& [e, c] : ordered) {
    if (!out.empty()) out += " + ";
    out += format_rational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*" + vars_[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  out += " + O(" + std::to_string(order_ + 1) + ")";
  return out;
}

bool operator==(const Series& a, const Series& b) {
  if (a.order_ != b.order_) return false;
  Series diff = a;
  diff -= b;
  return diff.is_zero();
}

}  // namespace hurwitz
