#pragma once

#include "csmarr/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace csmarr {

/// Exponent vector of a monomial in a fixed number of variables x0..x{k-1}.
///
/// Monomials compare in degree-lexicographic order: higher total degree is
/// larger, ties broken lexicographically with x0 > x1 > ... . This order is
/// used everywhere a deterministic basis or printout is needed.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }

  static Monomial variable(std::size_t num_vars, std::size_t index) {
    Monomial m(num_vars);
    m.exps_.at(index) = 1;
    return m;
  }

  std::size_t num_vars() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  Monomial operator*(const Monomial& other) const {
    check_same(other);
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
  }

  bool divides(const Monomial& other) const {
    check_same(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial r(other);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
    return r;
  }

  Monomial with_exponent(std::size_t i, int e) const {
    Monomial r(*this);
    r.exps_.at(i) = e;
    return r;
  }

  std::strong_ordering operator<=>(const Monomial& other) const {
    if (auto c = degree() <=> other.degree(); c != 0) return c;
    // lexicographic with x0 most significant
    for (std::size_t i = 0; i < std::min(exps_.size(), other.exps_.size()); ++i)
      if (auto c = exps_[i] <=> other.exps_[i]; c != 0) return c;
    return exps_.size() <=> other.exps_.size();
  }
  bool operator==(const Monomial&) const = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += "x" + std::to_string(i);
      if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  void check_same(const Monomial& other) const {
    if (other.exps_.size() != exps_.size())
      throw std::invalid_argument("monomial variable-count mismatch");
  }

  std::vector<int> exps_;
};

/// All monomials of total degree `degree` in `num_vars` variables, in
/// descending degree-lex order (x0^d first).
inline std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> exps(num_vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == num_vars) {
      exps[i] = left;
      out.emplace_back(exps);
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

/// Number of monomials of a given degree: C(degree + num_vars - 1, num_vars - 1).
inline std::size_t count_monomials(std::size_t num_vars, int degree) {
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(degree) + num_vars - 1,
               num_vars - 1);
  return c.get_ui();
}

/// Multivariate polynomial with rational coefficients. Terms are kept in
/// descending degree-lex order with no zero coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(Monomial(num_vars), c);
    return p;
  }
  static MultiPoly variable(std::size_t num_vars, std::size_t index) {
    MultiPoly p(num_vars);
    p.add_term(Monomial::variable(num_vars, index), 1);
    return p;
  }
  static MultiPoly monomial(const Monomial& m, const Rational& c = 1) {
    MultiPoly p(m.num_vars());
    p.add_term(m, c);
    return p;
  }
  /// Σ coeffs[i] * x_i.
  static MultiPoly linear(std::span<const Rational> coeffs) {
    MultiPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      p.add_term(Monomial::variable(coeffs.size(), i), coeffs[i]);
    return p;
  }

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
  }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.num_vars() != num_vars_) throw std::invalid_argument("monomial variable-count mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly homogeneous_part(int d) const {
    MultiPoly r(num_vars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  bool operator==(const MultiPoly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
  }

  /// Multiplies every term by a monomial.
  MultiPoly shifted(const Monomial& m) const {
    MultiPoly r(num_vars_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t * m, c);
    return r;
  }

  MultiPoly partial_derivative(std::size_t var) const {
    if (var >= num_vars_) throw std::out_of_range("derivative variable out of range");
    MultiPoly r(num_vars_);
    for (const auto& [m, c] : terms_) {
      int e = m[var];
      if (e == 0) continue;
      r.add_term(m.with_exponent(var, e - 1), c * e);
    }
    return r;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(num_vars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit_monomial = m.degree() == 0;
      if (a != 1 || unit_monomial) {
        os << a.get_str();
        if (!unit_monomial) os << "*";
      }
      if (!unit_monomial) os << m.to_string();
    }
    return os.str();
  }

 private:
  void check_same(const MultiPoly& o) const {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("polynomial variable-count mismatch");
  }

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

inline MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("polynomial variable-count mismatch");
  MultiPoly r(a.num_vars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

inline MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return poly_mul(a, b); }

/// Reduces `p` modulo the linear form Σ form[i] x_i by solving the form for
/// its first variable with a nonzero coefficient (the pivot) and substituting.
/// The result does not involve the pivot variable.
inline MultiPoly reduce_mod_linear(const MultiPoly& p, std::span<const Rational> form) {
  if (form.size() != p.num_vars()) throw std::invalid_argument("linear form variable-count mismatch");
  auto pivot_it = std::find_if(form.begin(), form.end(), [](const Rational& c) { return c != 0; });
  if (pivot_it == form.end()) throw std::invalid_argument("reduction modulo the zero form");
  const auto pivot = static_cast<std::size_t>(pivot_it - form.begin());
  const std::size_t k = form.size();

  // x_pivot = -(1/form[pivot]) Σ_{j != pivot} form[j] x_j
  MultiPoly sub(k);
  for (std::size_t j = 0; j < k; ++j)
    if (j != pivot) sub.add_term(Monomial::variable(k, j), -form[j] / form[pivot]);

  std::vector<MultiPoly> powers{MultiPoly::constant(k, 1)};
  MultiPoly r(k);
  for (const auto& [m, c] : p.terms()) {
    const int e = m[pivot];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * sub);
    r += powers[e].shifted(m.with_exponent(pivot, 0)) * c;
  }
  return r;
}

inline MultiPoly reduce_mod_linear(const MultiPoly& p, const MultiPoly& linear) {
  if (linear.num_vars() != p.num_vars())
    throw std::invalid_argument("linear form variable-count mismatch");
  std::vector<Rational> coeffs(p.num_vars());
  for (const auto& [m, c] : linear.terms()) {
    if (m.degree() != 1) throw std::invalid_argument("reduce_mod_linear: form is not linear homogeneous");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (m[i] == 1) coeffs[i] = c;
  }
  return reduce_mod_linear(p, coeffs);
}

/// Exact division: returns p / q when q divides p, nullopt otherwise.
/// Uses the division algorithm in degree-lex order; for a single divisor the
/// remainder is zero exactly when q divides p.
inline std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.num_vars() != q.num_vars()) throw std::invalid_argument("polynomial variable-count mismatch");
  MultiPoly rest = p;
  MultiPoly quotient(p.num_vars());
  const Monomial& lm = q.leading_monomial();
  const Rational& lc = q.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial& top = rest.leading_monomial();
    if (!lm.divides(top)) return std::nullopt;
    Monomial factor = lm.quotient_of(top);
    Rational coeff = rest.leading_coefficient() / lc;
    quotient.add_term(factor, coeff);
    rest -= q.shifted(factor) * coeff;
  }
  return quotient;
}

inline bool divides(const MultiPoly& q, const MultiPoly& p) { return divide_exact(p, q).has_value(); }

}  // namespace csmarr
