#pragma once

#include "csmarr/arrangement.hpp"
#include "csmarr/lattice.hpp"
#include "csmarr/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace csmarr {

/// Truncated power series a_0 + a_1 X + ... + a_n X^n, computed modulo
/// X^{n+1}.
class FormalClass {
 public:
  explicit FormalClass(std::size_t order) : coeffs_(order + 1) {}
  FormalClass(std::size_t order, std::initializer_list<Rational> init) : coeffs_(order + 1) {
    std::size_t i = 0;
    for (const auto& c : init) {
      if (i > order) break;
      coeffs_[i++] = c;
    }
  }

  static FormalClass one(std::size_t order) { return FormalClass(order, {1}); }
  /// 1 + a X
  static FormalClass linear(std::size_t order, const Rational& a) { return FormalClass(order, {1, a}); }
  /// c X^k
  static FormalClass power(std::size_t order, std::size_t k, const Rational& c = 1) {
    FormalClass f(order);
    if (k <= order) f.coeffs_[k] = c;
    return f;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  FormalClass& operator+=(const FormalClass& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  FormalClass& operator-=(const FormalClass& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend FormalClass operator+(FormalClass a, const FormalClass& b) { return a += b; }
  friend FormalClass operator-(FormalClass a, const FormalClass& b) { return a -= b; }
  friend FormalClass operator*(const Rational& s, FormalClass a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }

  bool operator==(const FormalClass&) const = default;

  std::string to_string(const std::string& var = "X") const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      Rational a = abs(c);
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      if (a != 1 || i == 0) out += a.get_str();
      if (i >= 1) out += (a != 1 ? "*" : "") + var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  void check(const FormalClass& o) const {
    if (o.order() != order()) throw std::invalid_argument("formal classes of different truncation order");
  }

 private:
  std::vector<Rational> coeffs_;
};

inline FormalClass series_mul(const FormalClass& f, const FormalClass& g) {
  f.check(g);
  const std::size_t n = f.order();
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += f[i] * g[j];
  }
  FormalClass r(n);
  for (std::size_t i = 0; i <= n; ++i) r += FormalClass::power(n, i, c[i]);
  return r;
}

inline FormalClass operator*(const FormalClass& f, const FormalClass& g) { return series_mul(f, g); }

/// Inverse of a unit modulo X^{n+1}.
inline FormalClass series_inv(const FormalClass& f) {
  if (f[0] == 0) throw std::domain_error("series_inv: constant term is zero");
  const std::size_t n = f.order();
  std::vector<Rational> g(n + 1);
  g[0] = 1 / f[0];
  for (std::size_t k = 1; k <= n; ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += f[i] * g[k - i];
    g[k] = -s / f[0];
  }
  FormalClass r(n);
  for (std::size_t i = 0; i <= n; ++i) r += FormalClass::power(n, i, g[i]);
  return r;
}

struct HypersurfaceSeriesResult {
  FormalClass csm_side;     // 1 - m X/(1+X) + (m-1) X^2/(1+X)^2
  FormalClass closed_form;  // (1 - (m-2) X)/(1+X)^2
  bool equal = false;
};

/// m hypersurfaces of one class X through a common codimension-2 locus,
/// pairwise transversal: compares the inclusion-exclusion CSM series with
/// the closed form for c(Der_V(D)) / c(TV), modulo X^{n+1}.
inline HypersurfaceSeriesResult verify_hypersurface_series(int m, std::size_t n) {
  if (m < 2) throw std::invalid_argument("example 4.1 needs m >= 2");
  const FormalClass x = FormalClass::power(n, 1);
  const FormalClass inv1x = series_inv(FormalClass::linear(n, 1));
  FormalClass csm = FormalClass::one(n) - Rational(m) * (x * inv1x) +
                    Rational(m - 1) * (x * x * inv1x * inv1x);
  FormalClass closed = FormalClass::linear(n, -(m - 2)) * inv1x * inv1x;
  return {csm, closed, csm == closed};
}

struct KoszulSeriesResult {
  FormalClass jacobian_class;   // c(O_JD(D)) = (1+mX)(1-(m-2)X)/(1+X)^2
  FormalClass derivation_class; // c(TV)/(1+mX) · c(O_JD(D))
  FormalClass csm_class;        // c(TV) · (CSM series of verify_hypersurface_series)
  bool equal = false;
};

/// Standard route: Der_V(D) through 0 → Der_V(D) → Der_V → O_D(D) →
/// O_JD(D) → 0, with O_JD resolved by a Koszul complex on two sections of
/// O((m-1)X). `tangent` is c(TV) as a formal unit; it has to cancel.
inline KoszulSeriesResult verify_koszul_series(int m, std::size_t n, const FormalClass& tangent) {
  if (m < 2) throw std::invalid_argument("example 4.1 needs m >= 2");
  if (tangent.order() != n || tangent[0] == 0) throw std::invalid_argument("c(TV) must be a unit of order n");
  const FormalClass inv1x = series_inv(FormalClass::linear(n, 1));
  const FormalClass divisor = FormalClass::linear(n, m);  // 1 + D, D = mX
  FormalClass jd = divisor * FormalClass::linear(n, -(m - 2)) * inv1x * inv1x;
  FormalClass der = tangent * series_inv(divisor) * jd;
  FormalClass csm = tangent * verify_hypersurface_series(m, n).csm_side;
  return {jd, der, csm, der == csm};
}

inline KoszulSeriesResult verify_koszul_series(int m, std::size_t n) {
  return verify_koszul_series(m, n, FormalClass::one(n));
}

struct ProjectionFormulaReport {
  FormalClass ox_pushforward;  // i_*(c(i^*O_X) ∩ [X])
  FormalClass ox_capped;       // c(O_X) ∩ i_*[X]
  FormalClass oy_pushforward;  // i_*(c(i^*O_Y) ∩ [X])
  FormalClass oy_capped;       // c(O_Y) ∩ i_*[X]
  bool ox_equal = false;
  bool oy_equal = false;
};

/// Hypersurfaces X, Y ⊂ P^n of degrees d, e, in A^*(P^n) = Z[h]/h^{n+1}.
/// i^*O_X = O_X is trivial on X, so its pushforward is d·h; i^*O_Y is the
/// structure sheaf of the divisor X∩Y on X, with c = 1/(1 - i^*Y), pushed
/// forward term by term as i_*((i^*Y)^k ∩ [X]) = (e h)^k · d h.
inline ProjectionFormulaReport projection_formula_examples(int d, int e, std::size_t n) {
  if (d < 1 || e < 1) throw std::invalid_argument("hypersurface degrees must be positive");
  if (n < 2) throw std::invalid_argument("projection examples need n >= 2");
  const FormalClass h = FormalClass::power(n, 1);
  const FormalClass x_class = Rational(d) * h;

  ProjectionFormulaReport r{x_class, FormalClass(n), FormalClass(n), FormalClass(n)};
  const FormalClass c_ox = series_inv(FormalClass::linear(n, -d));
  r.ox_capped = c_ox * x_class;

  FormalClass y_power = FormalClass::one(n);
  for (std::size_t k = 0; k <= n; ++k) {
    r.oy_pushforward += y_power * x_class;
    y_power = y_power * (Rational(e) * h);
  }
  const FormalClass c_oy = series_inv(FormalClass::linear(n, -e));
  r.oy_capped = c_oy * x_class;
  r.ox_equal = r.ox_pushforward == r.ox_capped;
  r.oy_equal = r.oy_pushforward == r.oy_capped;
  return r;
}

/// Element of A^*(V̂) for V̂ = P^2 blown up at points p_1..p_k:
/// a0·1 + ah·h + Σ b_i E_i + apt·pt, with h^2 = pt, E_i^2 = -pt,
/// h·E_i = E_i·E_j = 0 (i ≠ j).
class BlowupSurfaceClass {
 public:
  explicit BlowupSurfaceClass(std::vector<std::string> labels)
      : labels_(std::move(labels)), b_(labels_.size()) {}

  static BlowupSurfaceClass one(std::vector<std::string> labels) {
    BlowupSurfaceClass c(std::move(labels));
    c.a0_ = 1;
    return c;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t num_points() const { return labels_.size(); }

  const Rational& fundamental() const { return a0_; }
  const Rational& hyperplane() const { return ah_; }
  const Rational& exceptional(std::size_t i) const { return b_.at(i); }
  const Rational& point() const { return apt_; }

  BlowupSurfaceClass& set_fundamental(Rational v) { a0_ = std::move(v); return *this; }
  BlowupSurfaceClass& set_hyperplane(Rational v) { ah_ = std::move(v); return *this; }
  BlowupSurfaceClass& set_exceptional(std::size_t i, Rational v) { b_.at(i) = std::move(v); return *this; }
  BlowupSurfaceClass& set_point(Rational v) { apt_ = std::move(v); return *this; }

  /// Intersection number of the divisor parts.
  Rational divisor_product(const BlowupSurfaceClass& o) const {
    check(o);
    Rational s = ah_ * o.ah_;
    for (std::size_t i = 0; i < b_.size(); ++i) s -= b_[i] * o.b_[i];
    return s;
  }

  BlowupSurfaceClass operator+(const BlowupSurfaceClass& o) const {
    check(o);
    BlowupSurfaceClass r(*this);
    r.a0_ += o.a0_;
    r.ah_ += o.ah_;
    for (std::size_t i = 0; i < b_.size(); ++i) r.b_[i] += o.b_[i];
    r.apt_ += o.apt_;
    return r;
  }

  BlowupSurfaceClass operator*(const BlowupSurfaceClass& o) const {
    check(o);
    BlowupSurfaceClass r(labels_);
    r.a0_ = a0_ * o.a0_;
    r.ah_ = a0_ * o.ah_ + o.a0_ * ah_;
    for (std::size_t i = 0; i < b_.size(); ++i) r.b_[i] = a0_ * o.b_[i] + o.a0_ * b_[i];
    r.apt_ = a0_ * o.apt_ + o.a0_ * apt_ + divisor_product(o);
    return r;
  }

  /// Inverse of a unit (a0 ≠ 0): for u = a0(1 + N) with N nilpotent,
  /// u^{-1} = a0^{-1}(1 - N + N^2).
  BlowupSurfaceClass inverse() const {
    if (a0_ == 0) throw std::domain_error("class with zero degree-0 part is not invertible");
    BlowupSurfaceClass nil(labels_);
    const Rational inv0 = 1 / a0_;
    nil.ah_ = ah_ * inv0;
    for (std::size_t i = 0; i < b_.size(); ++i) nil.b_[i] = b_[i] * inv0;
    nil.apt_ = apt_ * inv0;
    BlowupSurfaceClass r(labels_);
    r.a0_ = inv0;
    r.ah_ = -nil.ah_ * inv0;
    for (std::size_t i = 0; i < b_.size(); ++i) r.b_[i] = -nil.b_[i] * inv0;
    r.apt_ = (-nil.apt_ + nil.divisor_product(nil)) * inv0;
    return r;
  }

  bool operator==(const BlowupSurfaceClass& o) const {
    return labels_ == o.labels_ && a0_ == o.a0_ && ah_ == o.ah_ && b_ == o.b_ && apt_ == o.apt_;
  }

  std::string to_string() const {
    std::string out = a0_.get_str() + "[V^]";
    auto add = [&out](const Rational& c, const std::string& name) {
      if (c == 0) return;
      out += (c < 0 ? " - " : " + ");
      Rational a = abs(c);
      if (a != 1) out += a.get_str() + "*";
      out += name;
    };
    add(ah_, "h");
    for (std::size_t i = 0; i < b_.size(); ++i) add(b_[i], "E[" + labels_[i] + "]");
    add(apt_, "pt");
    return out;
  }

 private:
  void check(const BlowupSurfaceClass& o) const {
    if (o.labels_ != labels_) throw std::invalid_argument("classes on different blow-ups");
  }

  std::vector<std::string> labels_;
  Rational a0_ = 0, ah_ = 0;
  std::vector<Rational> b_;
  Rational apt_ = 0;
};

/// Singular point of a line arrangement in P^2: a codimension-2 flat and the
/// lines through it.
struct MultiplePoint {
  std::vector<std::size_t> lines;
  std::size_t multiplicity() const { return lines.size(); }
  std::string label() const {
    std::string s = "p";
    for (std::size_t i = 0; i < lines.size(); ++i) s += (i ? "." : "") + std::to_string(lines[i]);
    return s;
  }
};

inline std::vector<MultiplePoint> multiple_points(const IntersectionLattice& lattice) {
  std::vector<MultiplePoint> out;
  for (const Flat* f : lattice.flats_of_codim(2)) out.push_back({f->hyperplanes});
  return out;
}

namespace detail {
inline void require_plane(const Arrangement& a) {
  if (a.num_vars() != 3) throw std::invalid_argument("this route needs a line arrangement in P^2 (vars 3)");
}
}  // namespace detail

/// c(Der_V̂(D')) ∩ [V̂] where V̂ blows up every point of multiplicity >= 3
/// and D' is the (SNC) total transform: c(TV̂) · ∏_j (1 + C_j)^{-1} over
/// proper transforms of lines and exceptional curves.
inline BlowupSurfaceClass blowup_chern_snc(const Arrangement& a) {
  detail::require_plane(a);
  const auto points = multiple_points(build_lattice(a));
  std::vector<const MultiplePoint*> centers;
  std::vector<std::string> labels;
  for (const auto& p : points)
    if (p.multiplicity() >= 3) {
      centers.push_back(&p);
      labels.push_back(p.label());
    }
  const std::size_t k = centers.size();

  BlowupSurfaceClass tangent = BlowupSurfaceClass::one(labels);
  tangent.set_hyperplane(3).set_point(3 + static_cast<long>(k));
  for (std::size_t i = 0; i < k; ++i) tangent.set_exceptional(i, -1);

  BlowupSurfaceClass total = tangent;
  for (std::size_t line = 0; line < a.size(); ++line) {
    BlowupSurfaceClass comp = BlowupSurfaceClass::one(labels);
    comp.set_hyperplane(1);
    for (std::size_t i = 0; i < k; ++i)
      if (std::binary_search(centers[i]->lines.begin(), centers[i]->lines.end(), line))
        comp.set_exceptional(i, -1);
    total = total * comp.inverse();
  }
  for (std::size_t i = 0; i < k; ++i) {
    BlowupSurfaceClass comp = BlowupSurfaceClass::one(labels);
    comp.set_exceptional(i, 1);
    total = total * comp.inverse();
  }
  return total;
}

/// π_*: [V̂] ↦ [P^2], h ↦ [line], E_i ↦ 0, pt ↦ pt.
inline CsmClass pushforward(const BlowupSurfaceClass& c) {
  return {{to_int64(c.fundamental()), to_int64(c.hyperplane()), to_int64(c.point())}};
}

/// c(Der_V(D)) = c(TV)/(1 + D) · c(O_JD(D)) for a line arrangement, where JD
/// is supported on the multiple points with Tjurina number (μ_p - 1)^2.
inline CsmClass tjurina_route(const Arrangement& a) {
  detail::require_plane(a);
  Integer tau = 0;
  for (const auto& p : multiple_points(build_lattice(a))) {
    const long mu = static_cast<long>(p.multiplicity());
    tau += (mu - 1) * (mu - 1);
  }
  const FormalClass tangent(2, {1, 3, 3});
  const FormalClass divisor = FormalClass::linear(2, static_cast<long>(a.size()));
  const FormalClass jacobian(2, {1, 0, Rational(-tau)});
  const FormalClass c = tangent * series_inv(divisor) * jacobian;
  return {{to_int64(c[0]), to_int64(c[1]), to_int64(c[2])}};
}

}  // namespace csmarr
