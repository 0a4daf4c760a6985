#pragma once

#include "csmarr/matrix.hpp"
#include "csmarr/polynomial.hpp"
#include "csmarr/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csmarr {

/// Malformed `.arr` input. `line()` is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A nonzero linear form on k^{n+1}, scaled so its first nonzero
/// coefficient is 1.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
    if (it == coeffs_.end()) throw std::invalid_argument("zero linear form");
    pivot_ = static_cast<std::size_t>(it - coeffs_.begin());
    const Rational lead = *it;
    for (auto& c : coeffs_) c /= lead;
  }

  std::size_t num_vars() const { return coeffs_.size(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t pivot() const { return pivot_; }

  MultiPoly polynomial() const { return MultiPoly::linear(coeffs_); }

  bool operator==(const LinearForm& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const { return polynomial().to_string(); }

 private:
  std::vector<Rational> coeffs_;
  std::size_t pivot_ = 0;
};

/// A reduced central arrangement of hyperplanes in k^{n+1}, equivalently a
/// projective arrangement in P^n. Proportional duplicates are dropped on
/// insertion and recorded as warnings.
class Arrangement {
 public:
  explicit Arrangement(std::size_t num_vars, std::string name = {})
      : num_vars_(num_vars), name_(std::move(name)) {
    if (num_vars == 0) throw std::invalid_argument("arrangement needs at least one variable");
  }

  /// Adds a form; returns false (and records a warning) when a proportional
  /// form is already present.
  bool add(const LinearForm& form) {
    if (form.num_vars() != num_vars_) throw std::invalid_argument("form has the wrong number of coefficients");
    auto it = std::find(forms_.begin(), forms_.end(), form);
    if (it != forms_.end()) {
      warnings_.push_back("duplicate hyperplane " + form.to_string() + " collapsed (same as hyperplane " +
                          std::to_string(it - forms_.begin()) + ")");
      return false;
    }
    forms_.push_back(form);
    return true;
  }
  bool add(std::vector<Rational> coeffs) { return add(LinearForm(std::move(coeffs))); }

  std::size_t num_vars() const { return num_vars_; }
  /// Projective dimension n.
  std::size_t dimension() const { return num_vars_ - 1; }
  std::size_t size() const { return forms_.size(); }
  bool empty() const { return forms_.empty(); }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const LinearForm& operator[](std::size_t i) const { return forms_[i]; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  QMatrix coefficient_matrix() const {
    QMatrix m(forms_.size(), num_vars_);
    for (std::size_t i = 0; i < forms_.size(); ++i)
      for (std::size_t j = 0; j < num_vars_; ++j) m(i, j) = forms_[i][j];
    return m;
  }

  /// Arrangement without hyperplane `index` (same name, no warnings).
  Arrangement deletion(std::size_t index) const {
    Arrangement r(num_vars_, name_);
    for (std::size_t i = 0; i < forms_.size(); ++i)
      if (i != index) r.forms_.push_back(forms_[i]);
    return r;
  }

  /// The one-hyperplane arrangement {forms()[index]}.
  Arrangement single(std::size_t index) const {
    Arrangement r(num_vars_);
    r.forms_.push_back(forms_.at(index));
    return r;
  }

  bool operator==(const Arrangement& o) const {
    return num_vars_ == o.num_vars_ && forms_ == o.forms_ && name_ == o.name_;
  }

 private:
  std::size_t num_vars_;
  std::string name_;
  std::vector<LinearForm> forms_;
  std::vector<std::string> warnings_;
};

namespace detail {
inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}
}  // namespace detail

/// Parses the `.arr` text format:
///
///   # comment (a "# name: <label>" comment sets the arrangement name)
///   vars k
///   a_0 a_1 ... a_{k-1}     one hyperplane per line, integers or p/q
///
/// Throws InputError with the offending line number.
inline Arrangement parse_arrangement(std::string_view text) {
  std::optional<Arrangement> arr;
  std::string name;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line_no == 1 && raw.substr(0, 3) == "\xEF\xBB\xBF") raw.remove_prefix(3);
    std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto body = detail::trim(line.substr(1));
      if (body.substr(0, 5) == "name:") {
        name = std::string(detail::trim(body.substr(5)));
        if (arr) arr->set_name(name);
      }
      continue;
    }
    auto tokens = detail::split_ws(line);
    if (!arr) {
      if (tokens.size() != 2 || tokens[0] != "vars")
        throw InputError(line_no, "expected 'vars k' header");
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(std::string(tokens[1]), &used);
        if (used != tokens[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InputError(line_no, "malformed variable count '" + std::string(tokens[1]) + "'");
      }
      if (k < 1) throw InputError(line_no, "variable count must be at least 1");
      arr.emplace(static_cast<std::size_t>(k), name);
      continue;
    }
    if (tokens.size() != arr->num_vars())
      throw InputError(line_no, "expected " + std::to_string(arr->num_vars()) + " coefficients, got " +
                                    std::to_string(tokens.size()));
    std::vector<Rational> coeffs;
    for (auto tok : tokens) {
      auto q = parse_rational(tok);
      if (!q) throw InputError(line_no, "malformed rational '" + std::string(tok) + "'");
      coeffs.push_back(*q);
    }
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; }))
      throw InputError(line_no, "zero linear form");
    arr->add(std::move(coeffs));
  }
  if (!arr) throw InputError(0, "missing 'vars k' header");
  return std::move(*arr);
}

/// Canonical text rendering; parse_arrangement(render_arrangement(a)) == a.
inline std::string render_arrangement(const Arrangement& a) {
  std::ostringstream os;
  if (!a.name().empty()) os << "# name: " << a.name() << "\n";
  os << "vars " << a.num_vars() << "\n";
  for (const auto& f : a.forms()) {
    for (std::size_t j = 0; j < f.num_vars(); ++j) os << (j ? " " : "") << f[j].get_str();
    os << "\n";
  }
  return os.str();
}

/// Q = product of the canonical forms; 1 for the empty arrangement.
inline MultiPoly defining_polynomial(const Arrangement& a) {
  MultiPoly q = MultiPoly::constant(a.num_vars(), 1);
  for (const auto& f : a.forms()) q = q * f.polynomial();
  return q;
}

inline std::size_t rank(const Arrangement& a) {
  return a.empty() ? 0 : rank(a.coefficient_matrix());
}

inline bool is_essential(const Arrangement& a) { return rank(a) == a.num_vars(); }

}  // namespace csmarr
