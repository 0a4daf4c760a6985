#pragma once

#include "csmarr/arrangement.hpp"
#include "csmarr/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace csmarr {

/// Integer polynomial in one variable, coefficients in ascending degree.
struct IntPoly {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  std::int64_t operator()(std::int64_t t) const {
    std::int64_t v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
  }

  /// Quotient by (t - 1); throws unless (t - 1) divides exactly.
  IntPoly divided_by_t_minus_1() const {
    if (coeffs.size() < 2) throw std::domain_error("(t - 1) does not divide a constant polynomial");
    // synthetic division from the top coefficient down
    std::vector<std::int64_t> q(coeffs.size() - 1);
    std::int64_t carry = 0;
    for (std::size_t i = coeffs.size() - 1; i >= 1; --i) {
      carry = coeffs[i] + carry;
      q[i - 1] = carry;
    }
    if (coeffs[0] + carry != 0) throw std::domain_error("(t - 1) does not divide the polynomial");
    return {q};
  }

  static IntPoly from_roots(const std::vector<int>& roots) {
    IntPoly p{{1}};
    for (int r : roots) {
      std::vector<std::int64_t> next(p.coeffs.size() + 1, 0);
      for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        next[i + 1] += p.coeffs[i];
        next[i] -= r * p.coeffs[i];
      }
      p.coeffs = std::move(next);
    }
    return p;
  }

  bool operator==(const IntPoly&) const = default;

  std::string to_string(const std::string& var = "t") const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      std::int64_t c = coeffs[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      std::int64_t a = c < 0 ? -c : c;
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      if (a != 1 || i == 0) out += std::to_string(a);
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }
};

/// Class vector in A_*(P^n): coefficients[j] multiplies [P^{n-j}], so the
/// index is the codimension. The last entry is the degree (Euler
/// characteristic for a CSM class).
struct CsmClass {
  std::vector<std::int64_t> coefficients;

  std::size_t dimension() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  bool operator==(const CsmClass&) const = default;

  std::string to_string() const {
    const std::size_t n = dimension();
    std::string out;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      const std::int64_t c = coefficients[j];
      if (j) out += c < 0 ? " - " : " + ";
      out += std::to_string(j && c < 0 ? -c : c) + "[P^" + std::to_string(n - j) + "]";
    }
    return out;
  }
};

/// An intersection of hyperplanes, stored as the reduced echelon basis of the
/// span of the forms vanishing on it.
struct Flat {
  QMatrix basis;
  std::size_t codim = 0;
  std::vector<std::size_t> hyperplanes;  // sorted indices of hyperplanes containing the flat
  std::int64_t mobius = 0;

  /// Linear dimension in k^{n+1}.
  std::size_t dim(std::size_t num_vars) const { return num_vars - codim; }
};

/// Flats grouped by codimension. Within a codimension, flats are ordered by
/// their hyperplane index sets (lexicographic), so numbering is deterministic.
class IntersectionLattice {
 public:
  IntersectionLattice(std::size_t num_vars, std::vector<Flat> flats)
      : num_vars_(num_vars), flats_(std::move(flats)) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& f : flats_) r = std::max(r, f.codim);
    return r;
  }

  std::vector<const Flat*> flats_of_codim(std::size_t c) const {
    std::vector<const Flat*> out;
    for (const auto& f : flats_)
      if (f.codim == c) out.push_back(&f);
    return out;
  }

  /// True when flat a lies above b, i.e. a's hyperplanes include b's
  /// (a ⊆ b as subspaces).
  static bool below_or_equal(const Flat& b, const Flat& a) {
    return std::includes(a.hyperplanes.begin(), a.hyperplanes.end(), b.hyperplanes.begin(),
                         b.hyperplanes.end());
  }

 private:
  std::size_t num_vars_;
  std::vector<Flat> flats_;
};

inline IntersectionLattice build_lattice(const Arrangement& a) {
  const std::size_t k = a.num_vars();
  std::vector<Flat> flats;
  flats.push_back(Flat{QMatrix(0, k), 0, {}, 1});

  // flats of codim c+1 are spans of (flat of codim c) + (one more hyperplane)
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::map<std::vector<std::size_t>, Flat> next;
    for (std::size_t idx : frontier) {
      for (std::size_t h = 0; h < a.size(); ++h) {
        const Flat& base = flats[idx];
        if (std::binary_search(base.hyperplanes.begin(), base.hyperplanes.end(), h)) continue;
        EchelonBasis span(k);
        for (std::size_t r = 0; r < base.basis.rows(); ++r)
          span.insert(QVector(base.basis.row(r).begin(), base.basis.row(r).end()));
        span.insert(QVector(a[h].coefficients().begin(), a[h].coefficients().end()));
        std::vector<std::size_t> members;
        for (std::size_t g = 0; g < a.size(); ++g)
          if (span.contains(QVector(a[g].coefficients().begin(), a[g].coefficients().end())))
            members.push_back(g);
        if (next.count(members)) continue;
        Flat f{QMatrix::from_rows(span.rows(), k), span.rank(), members, 0};
        next.emplace(std::move(members), std::move(f));
      }
    }
    frontier.clear();
    for (auto& [key, f] : next) {
      frontier.push_back(flats.size());
      flats.push_back(std::move(f));
    }
  }

  // μ(x) = -Σ_{y strictly below x} μ(y), in order of increasing codim
  for (std::size_t i = 1; i < flats.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (flats[j].codim < flats[i].codim && IntersectionLattice::below_or_equal(flats[j], flats[i]))
        s += flats[j].mobius;
    flats[i].mobius = -s;
  }
  return IntersectionLattice(k, std::move(flats));
}

/// χ(A, t) = Σ_x μ(x) t^{dim x}, dim taken in k^{n+1}.
inline IntPoly char_poly(const IntersectionLattice& lattice) {
  IntPoly p{std::vector<std::int64_t>(lattice.num_vars() + 1, 0)};
  for (const auto& f : lattice.flats()) p.coeffs[f.dim(lattice.num_vars())] += f.mobius;
  return p;
}

inline IntPoly char_poly(const Arrangement& a) { return char_poly(build_lattice(a)); }

/// χ(A, t) / (t - 1); requires a nonempty arrangement.
inline IntPoly reduced_char_poly(const Arrangement& a) { return char_poly(a).divided_by_t_minus_1(); }

/// CSM class of P^n minus the arrangement. The indicator of the complement
/// is Σ_x μ(x) 1_{P(x)} over flats with nonempty projectivization, and
/// c_SM(1_{P^k}) = Σ_i C(k+1, i) [P^{k-i}] pushed into P^n.
inline CsmClass csm_complement(const IntersectionLattice& lattice) {
  const std::size_t n = lattice.num_vars() - 1;
  std::vector<Integer> c(n + 1, 0);
  for (const auto& f : lattice.flats()) {
    const std::size_t dim = f.dim(lattice.num_vars());
    if (dim == 0) continue;
    const std::size_t proj_dim = dim - 1;
    const std::size_t offset = n - proj_dim;
    for (std::size_t i = 0; i <= proj_dim; ++i) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), proj_dim + 1, i);
      c[offset + i] += binom * f.mobius;
    }
  }
  CsmClass out;
  for (const auto& v : c) out.coefficients.push_back(to_int64(Rational(v)));
  return out;
}

inline CsmClass csm_complement(const Arrangement& a) { return csm_complement(build_lattice(a)); }

namespace detail {
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, base = ((a % p) + p) % p;
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
  }
  return r;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace detail

/// Thrown when a prime is unusable for the point-count oracle.
class BadPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Counts points of P^n(F_p) on no hyperplane, by enumerating every
/// projective point in normalized form (first nonzero coordinate 1).
inline std::int64_t point_count_oracle(const Arrangement& a, std::int64_t p) {
  if (!detail::is_prime(p) || p > 1000) throw BadPrime("point count oracle needs a prime p <= 1000");
  const std::size_t k = a.num_vars();
  std::vector<std::vector<std::int64_t>> forms;
  for (const auto& f : a.forms()) {
    std::vector<std::int64_t> row(k);
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      Integer den = f[j].get_den();
      if (den % p == 0) throw BadPrime("prime " + std::to_string(p) + " divides a coefficient denominator");
      Integer num = f[j].get_num() % p;
      std::int64_t v = (num.get_si() % p + p) % p;
      row[j] = v * detail::mod_inverse(static_cast<std::int64_t>(Integer(den % p).get_si()), p) % p;
      nonzero |= row[j] != 0;
    }
    if (!nonzero) throw BadPrime("form " + f.to_string() + " vanishes modulo " + std::to_string(p));
    forms.push_back(std::move(row));
  }

  std::int64_t count = 0;
  std::vector<std::int64_t> x(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    // x = (0,..,0, 1, free entries)
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    const std::size_t free = k - lead - 1;
    std::vector<std::int64_t> vals(free, 0);
    while (true) {
      for (std::size_t i = 0; i < free; ++i) x[lead + 1 + i] = vals[i];
      bool off = true;
      for (const auto& f : forms) {
        std::int64_t s = 0;
        for (std::size_t j = lead; j < k; ++j) s += f[j] * x[j];
        if (s % p == 0) {
          off = false;
          break;
        }
      }
      if (off) ++count;
      std::size_t i = 0;
      while (i < free && ++vals[i] == p) vals[i++] = 0;
      if (i == free) break;
    }
  }
  return count;
}

/// Smallest `count` primes >= start that the oracle accepts for `a`.
inline std::vector<std::int64_t> choose_good_primes(const Arrangement& a, std::size_t count,
                                                    std::int64_t start = 101) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = start; out.size() < count && p <= 1000; ++p) {
    if (!detail::is_prime(p)) continue;
    bool good = true;
    for (const auto& f : a.forms()) {
      bool nonzero = false;
      for (std::size_t j = 0; j < f.num_vars(); ++j) {
        if (f[j].get_den() % p == 0) good = false;
        if (f[j].get_num() % p != 0) nonzero = true;
      }
      good = good && nonzero;
    }
    if (good) out.push_back(p);
  }
  return out;
}

}  // namespace csmarr
