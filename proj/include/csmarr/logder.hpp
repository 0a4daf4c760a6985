#pragma once

#include "csmarr/arrangement.hpp"
#include "csmarr/lattice.hpp"
#include "csmarr/matrix.hpp"
#include "csmarr/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace csmarr {

/// Polynomial vector field θ = Σ θ(x_j) ∂_j whose coefficients are all
/// homogeneous of one degree. Constant fields have degree 0, the Euler
/// derivation degree 1.
class Derivation {
 public:
  Derivation(std::vector<MultiPoly> coeffs, int degree) : coeffs_(std::move(coeffs)), degree_(degree) {
    if (coeffs_.empty()) throw std::invalid_argument("derivation needs at least one variable");
    for (const auto& c : coeffs_) {
      if (c.num_vars() != coeffs_.size()) throw std::invalid_argument("derivation coefficient variable-count mismatch");
      if (!c.is_zero() && (!c.is_homogeneous() || c.degree() != degree_))
        throw std::invalid_argument("derivation coefficients must be homogeneous of degree " + std::to_string(degree));
    }
  }

  static Derivation euler(std::size_t num_vars) {
    std::vector<MultiPoly> c;
    for (std::size_t j = 0; j < num_vars; ++j) c.push_back(MultiPoly::variable(num_vars, j));
    return {std::move(c), 1};
  }

  static Derivation partial(std::size_t num_vars, std::size_t j) {
    std::vector<MultiPoly> c(num_vars, MultiPoly(num_vars));
    c.at(j) = MultiPoly::constant(num_vars, 1);
    return {std::move(c), 0};
  }

  std::size_t num_vars() const { return coeffs_.size(); }
  int degree() const { return degree_; }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }
  const MultiPoly& operator[](std::size_t j) const { return coeffs_[j]; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly& p) { return p.is_zero(); });
  }

  /// θ(f) = Σ θ(x_j) ∂f/∂x_j.
  MultiPoly apply(const MultiPoly& f) const {
    MultiPoly r(num_vars());
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      if (!coeffs_[j].is_zero()) r += coeffs_[j] * f.partial_derivative(j);
    return r;
  }

  /// θ(α) for a linear form α = Σ λ_j x_j.
  MultiPoly apply(const LinearForm& form) const {
    MultiPoly r(num_vars());
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      if (form[j] != 0) r += coeffs_[j] * form[j];
    return r;
  }

  Derivation times(const MultiPoly& f) const {
    if (!f.is_homogeneous() || f.is_zero()) throw std::invalid_argument("multiplier must be nonzero homogeneous");
    std::vector<MultiPoly> c;
    for (const auto& p : coeffs_) c.push_back(p * f);
    return {std::move(c), degree_ + f.degree()};
  }

  Derivation operator+(const Derivation& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("adding derivations of different degrees");
    std::vector<MultiPoly> c;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) c.push_back(coeffs_[j] + o.coeffs_[j]);
    return {std::move(c), degree_};
  }

  bool operator==(const Derivation& o) const { return degree_ == o.degree_ && coeffs_ == o.coeffs_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[j].to_string() + ")*d" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<MultiPoly> coeffs_;
  int degree_;
};

/// The logarithmic test: θ(α) ≡ 0 mod α for every hyperplane α.
inline bool is_logarithmic(const Derivation& theta, const Arrangement& a) {
  for (const auto& f : a.forms())
    if (!reduce_mod_linear(theta.apply(f), f.coefficients()).is_zero()) return false;
  return true;
}

/// The membership predicate in the form θ(Q) ∈ (Q) for an arbitrary
/// (possibly non-reduced) product Q of linear forms.
inline bool preserves_ideal(const Derivation& theta, const MultiPoly& q) {
  return divides(q, theta.apply(q));
}

/// Coordinates for homogeneous degree-d derivations in k variables: entry
/// j * M + i is the coefficient of monomials_of_degree(k, d)[i] in θ(x_j).
class DerivationCoordinates {
 public:
  DerivationCoordinates(std::size_t num_vars, int degree)
      : num_vars_(num_vars), degree_(degree), monomials_(monomials_of_degree(num_vars, degree)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  std::size_t num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return num_vars_ * monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t monomial_index(const Monomial& m) const { return index_.at(m); }

  Derivation to_derivation(const QVector& v) const {
    std::vector<MultiPoly> c(num_vars_, MultiPoly(num_vars_));
    const std::size_t m = monomials_.size();
    for (std::size_t j = 0; j < num_vars_; ++j)
      for (std::size_t i = 0; i < m; ++i)
        if (v[j * m + i] != 0) c[j].add_term(monomials_[i], v[j * m + i]);
    return {std::move(c), degree_};
  }

  QVector to_vector(const Derivation& theta) const {
    if (!theta.is_zero() && theta.degree() != degree_) throw std::invalid_argument("derivation degree mismatch");
    QVector v(dim());
    const std::size_t m = monomials_.size();
    for (std::size_t j = 0; j < num_vars_; ++j)
      for (const auto& [mono, c] : theta[j].terms()) v[j * m + index_.at(mono)] = c;
    return v;
  }

 private:
  std::size_t num_vars_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

/// Basis of D(A)_d as coordinate vectors (see DerivationCoordinates).
///
/// Each hyperplane α contributes the linear conditions "coefficients of
/// θ(α) mod α vanish"; the basis is the echelon-canonical kernel.
inline std::vector<QVector> log_derivation_vectors(const Arrangement& a, int d,
                                                   const DerivationCoordinates& coords) {
  if (d < 0) throw std::invalid_argument("negative derivation degree");
  const std::size_t k = a.num_vars();
  const std::size_t m = coords.monomials().size();
  std::vector<QVector> rows;
  for (const auto& form : a.forms()) {
    std::vector<MultiPoly> reduced;
    reduced.reserve(m);
    for (const auto& mono : coords.monomials())
      reduced.push_back(reduce_mod_linear(MultiPoly::monomial(mono), form.coefficients()));
    // one row per monomial of the reduced polynomial ring
    std::map<Monomial, QVector> by_target;
    for (std::size_t j = 0; j < k; ++j) {
      if (form[j] == 0) continue;
      for (std::size_t i = 0; i < m; ++i)
        for (const auto& [tgt, c] : reduced[i].terms()) {
          auto [it, _] = by_target.try_emplace(tgt, QVector(coords.dim()));
          it->second[j * m + i] += form[j] * c;
        }
    }
    for (auto& [tgt, row] : by_target) rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < coords.dim(); ++i) {
      QVector e(coords.dim());
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return kernel_basis(QMatrix::from_rows(rows, coords.dim()));
}

inline std::vector<Derivation> log_derivation_space(const Arrangement& a, int d) {
  DerivationCoordinates coords(a.num_vars(), d);
  std::vector<Derivation> out;
  for (const auto& v : log_derivation_vectors(a, d, coords)) out.push_back(coords.to_derivation(v));
  return out;
}

/// Checks D(A)_d = ∩_i D({α_i})_d, intersecting the single-hyperplane
/// spaces pairwise through kernels of [U | -W].
inline bool intersection_property_check(const Arrangement& a, int d) {
  DerivationCoordinates coords(a.num_vars(), d);
  const auto whole = log_derivation_vectors(a, d, coords);
  std::vector<QVector> meet;
  if (a.empty()) {
    meet = log_derivation_vectors(a, d, coords);
  } else {
    meet = log_derivation_vectors(a.single(0), d, coords);
    for (std::size_t i = 1; i < a.size(); ++i)
      meet = intersect_spans(meet, log_derivation_vectors(a.single(i), d, coords), coords.dim());
  }
  return same_span(whole, meet, coords.dim());
}

struct DegreePiece {
  int degree = 0;
  std::size_t dimension = 0;            // dim D(A)_d
  std::size_t generated_dimension = 0;  // dim of S·(lower generators) in degree d
  std::vector<Derivation> new_generators;
};

/// Per-degree dimensions and the minimal generators found by the search.
struct GradedBasis {
  std::vector<DegreePiece> pieces;
  std::vector<std::string> log;

  std::vector<Derivation> generators() const {
    std::vector<Derivation> out;
    for (const auto& p : pieces)
      for (const auto& g : p.new_generators) out.push_back(g);
    return out;
  }
  std::vector<int> generator_degrees() const {
    std::vector<int> out;
    for (const auto& g : generators()) out.push_back(g.degree());
    return out;
  }
};

enum class SearchExit { Complete, GeneratorOverflow, DegreeSumReached, DegreeBoundReached };

/// Minimal generators of D(A) in degrees 0..max_degree (default |A|).
///
/// In degree d the generators are a greedy complement, in basis order, of
/// the span of u·g over earlier generators g and monomials u of degree
/// d - deg g. With `early_exit` the search stops once there are more than
/// n+1 generators, or n+1 of them with degree sum |A|.
inline GradedBasis minimal_generators(const Arrangement& a, std::optional<int> max_degree = std::nullopt,
                                      bool early_exit = true, SearchExit* exit_reason = nullptr) {
  const std::size_t k = a.num_vars();
  const int top = max_degree.value_or(static_cast<int>(a.size()));
  GradedBasis gb;
  std::vector<Derivation> gens;
  int degree_sum = 0;
  SearchExit reason = SearchExit::DegreeBoundReached;
  for (int d = 0; d <= top; ++d) {
    DerivationCoordinates coords(k, d);
    EchelonBasis span(coords.dim());
    for (const auto& g : gens)
      for (const auto& u : monomials_of_degree(k, d - g.degree()))
        span.insert(coords.to_vector(g.times(MultiPoly::monomial(u))));
    DegreePiece piece;
    piece.degree = d;
    piece.generated_dimension = span.rank();
    const auto basis = log_derivation_vectors(a, d, coords);
    piece.dimension = basis.size();
    for (const auto& v : basis)
      if (span.insert(v)) piece.new_generators.push_back(coords.to_derivation(v));
    for (const auto& g : piece.new_generators) {
      gens.push_back(g);
      degree_sum += d;
    }
    if (!piece.new_generators.empty())
      gb.log.push_back("degree " + std::to_string(d) + ": dim " + std::to_string(piece.dimension) + ", " +
                       std::to_string(piece.new_generators.size()) + " new generator(s)");
    gb.pieces.push_back(std::move(piece));
    if (!early_exit) continue;
    if (gens.size() > k) {
      gb.log.push_back("stop at degree " + std::to_string(d) + ": " + std::to_string(gens.size()) +
                       " generators exceed n+1 = " + std::to_string(k));
      reason = SearchExit::GeneratorOverflow;
      break;
    }
    if (gens.size() == k && degree_sum == static_cast<int>(a.size())) {
      gb.log.push_back("stop at degree " + std::to_string(d) + ": n+1 generators with degree sum |A| = " +
                       std::to_string(a.size()));
      reason = SearchExit::DegreeSumReached;
      break;
    }
  }
  if (reason == SearchExit::DegreeBoundReached)
    gb.log.push_back("search reached degree bound " + std::to_string(top));
  if (!early_exit) reason = SearchExit::Complete;
  if (exit_reason) *exit_reason = reason;
  return gb;
}

/// Coefficient matrix M[i][j] = θ_i(x_j).
inline PolyMatrix coefficient_matrix(const std::vector<Derivation>& thetas) {
  PolyMatrix m;
  for (const auto& t : thetas) m.push_back(t.coefficients());
  return m;
}

struct FreenessReport {
  bool free = false;
  std::vector<int> exponents;          // sorted ascending, when free
  std::optional<Rational> saito_scalar;  // c with det = c·Q, when free
  std::vector<Derivation> witnesses;
  MultiPoly determinant;
  std::string reason;                  // failure reason when not free
  std::vector<std::string> log;
};

/// Decides freeness with Saito's criterion: D(A) is free iff n+1 minimal
/// generators have coefficient determinant c·Q with c a nonzero scalar.
inline FreenessReport decide_freeness(const Arrangement& a) {
  const std::size_t k = a.num_vars();
  FreenessReport rep;
  SearchExit exit = SearchExit::Complete;
  GradedBasis gb = minimal_generators(a, std::nullopt, true, &exit);
  rep.log = gb.log;
  auto gens = gb.generators();
  if (exit == SearchExit::GeneratorOverflow) {
    rep.reason = "generator overflow: more than " + std::to_string(k) + " minimal generators";
    rep.log.push_back("not free: " + rep.reason);
    return rep;
  }
  if (gens.size() != k) {
    rep.reason = "degree-sum mismatch: " + std::to_string(gens.size()) + " generators up to degree " +
                 std::to_string(a.size()) + " without degree sum |A|";
    rep.log.push_back("not free: " + rep.reason);
    return rep;
  }
  const MultiPoly q = defining_polynomial(a);
  MultiPoly det = poly_det(coefficient_matrix(gens));
  rep.determinant = det;
  auto quotient = det.is_zero() ? std::nullopt : divide_exact(det, q);
  if (!quotient || !quotient->is_constant() || quotient->is_zero()) {
    rep.reason = "determinant failure: det = " + det.to_string() + " is not a nonzero multiple of Q";
    rep.log.push_back("not free: " + rep.reason);
    return rep;
  }
  rep.free = true;
  rep.saito_scalar = quotient->coefficient(Monomial(k));
  rep.witnesses = gens;
  for (const auto& g : gens) rep.exponents.push_back(g.degree());
  std::sort(rep.exponents.begin(), rep.exponents.end());
  rep.log.push_back("free: Saito determinant = " + rep.saito_scalar->get_str() + " * Q");
  return rep;
}

/// Thrown when chern_class_free is called on an arrangement outside its
/// domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Truncated product ∏ (1 + (1 - e_i) h) over the exponents with one
/// exponent 1 removed, as a class vector over [P^n], ..., [pt].
inline CsmClass chern_class_from_exponents(std::vector<int> exponents) {
  auto euler = std::find(exponents.begin(), exponents.end(), 1);
  if (euler == exponents.end()) throw std::logic_error("no exponent equal to 1 to remove for the Euler derivation");
  exponents.erase(euler);
  const std::size_t n = exponents.size();
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = 1;
  for (int e : exponents) {
    for (std::size_t j = n; j >= 1; --j) c[j] += (1 - e) * c[j - 1];
  }
  return {c};
}

inline CsmClass chern_class_free(const FreenessReport& rep) {
  if (!rep.free) throw PreconditionError("chern_class_free requires a free arrangement");
  return chern_class_from_exponents(rep.exponents);
}

inline CsmClass chern_class_free(const Arrangement& a) { return chern_class_free(decide_freeness(a)); }

}  // namespace csmarr
