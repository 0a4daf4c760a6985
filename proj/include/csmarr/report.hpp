#pragma once

#include "csmarr/arrangement.hpp"
#include "csmarr/chow.hpp"
#include "csmarr/lattice.hpp"
#include "csmarr/logder.hpp"
#include "csmarr/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

// JSON and text renderings of analysis results. JSON objects are
// nlohmann::json (std::map-backed), so keys come out sorted and repeated
// runs are byte-identical.

namespace csmarr::report {

using nlohmann::json;

inline constexpr const char* kToolName = "csmarr";
inline constexpr const char* kToolVersion = "0.1.0";

inline json tool_json() { return {{"name", kToolName}, {"version", kToolVersion}}; }

inline json class_json(const std::optional<CsmClass>& c) {
  if (!c) return nullptr;
  return c->coefficients;
}

inline std::vector<std::string> class_basis_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j <= n; ++j) out.push_back("[P^" + std::to_string(n - j) + "]");
  return out;
}

inline json arrangement_json(const Arrangement& a) {
  json forms = json::array();
  for (const auto& f : a.forms()) forms.push_back(f.to_string());
  return {{"name", a.name()},
          {"n", a.dimension()},
          {"size", a.size()},
          {"rank", rank(a)},
          {"essential", is_essential(a)},
          {"forms", forms},
          {"warnings", a.warnings()}};
}

inline json lattice_json(const IntersectionLattice& lat) {
  json flats = json::array();
  std::vector<std::size_t> counts(lat.rank() + 1, 0);
  for (const auto& f : lat.flats()) {
    ++counts[f.codim];
    flats.push_back({{"codim", f.codim}, {"hyperplanes", f.hyperplanes}, {"mobius", f.mobius}});
  }
  return {{"size", lat.size()}, {"rank", lat.rank()}, {"flats_per_codim", counts}, {"flats", flats}};
}

struct OracleCheck {
  std::int64_t prime = 0;
  std::optional<std::int64_t> count;
  std::optional<std::int64_t> expected;
  std::string error;
  bool ok() const { return count && expected && *count == *expected; }
};

inline std::vector<OracleCheck> run_oracle(const Arrangement& a, const IntPoly& chi,
                                           const std::vector<std::int64_t>& primes) {
  std::vector<OracleCheck> out;
  for (auto p : primes) {
    OracleCheck c;
    c.prime = p;
    try {
      c.count = point_count_oracle(a, p);
      if (!a.empty()) c.expected = chi.divided_by_t_minus_1()(p);
      else c.error = "empty arrangement: no reduced characteristic polynomial";
    } catch (const BadPrime& e) {
      c.error = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline json charpoly_json(const IntPoly& chi, const std::vector<OracleCheck>& oracle) {
  json checks = json::array();
  for (const auto& c : oracle) {
    json entry = {{"prime", c.prime}, {"ok", c.ok()}};
    entry["point_count"] = c.count ? json(*c.count) : json(nullptr);
    entry["reduced_charpoly_at_p"] = c.expected ? json(*c.expected) : json(nullptr);
    if (!c.error.empty()) entry["error"] = c.error;
    checks.push_back(entry);
  }
  return {{"coefficients", chi.coeffs}, {"polynomial", chi.to_string()}, {"oracle", checks}};
}

inline json csm_json(const CsmClass& c) {
  return {{"vector", c.coefficients}, {"basis", class_basis_labels(c.dimension())}};
}

inline json derivation_list(const std::vector<Derivation>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(d.to_string());
  return out;
}

inline json derivations_json(const Arrangement& a, int max_degree) {
  json degrees = json::array();
  for (int d = 0; d <= max_degree; ++d) {
    auto basis = log_derivation_space(a, d);
    degrees.push_back({{"degree", d}, {"dimension", basis.size()}, {"basis", derivation_list(basis)}});
  }
  GradedBasis gb = minimal_generators(a, max_degree, false);
  return {{"max_degree", max_degree},
          {"degrees", degrees},
          {"minimal_generators", derivation_list(gb.generators())},
          {"generator_degrees", gb.generator_degrees()}};
}

inline json freeness_json(const FreenessReport& r) {
  json j = {{"free", r.free}, {"log", r.log}, {"witnesses", derivation_list(r.witnesses)}};
  j["exponents"] = r.free ? json(r.exponents) : json(nullptr);
  j["saito_scalar"] = r.saito_scalar ? json(r.saito_scalar->get_str()) : json(nullptr);
  j["determinant"] = r.free ? json(r.determinant.to_string()) : json(nullptr);
  j["reason"] = r.free ? json(nullptr) : json(r.reason);
  return j;
}

inline json verification_json(const VerificationReport& v) {
  json routes = json::object();
  for (const auto& [name, c] : v.routes) routes[name] = class_json(c);
  json agreement = json::object();
  for (const auto& [pair, eq] : v.agreement) agreement[pair.first + "=" + pair.second] = eq;
  json j = {{"label", v.label},
            {"n", v.dimension},
            {"routes", routes},
            {"routes_compared", v.computed_routes()},
            {"skipped", v.skipped},
            {"agreement", agreement},
            {"basis", class_basis_labels(v.dimension)},
            {"pass", v.pass}};
  j["blowup_class"] = v.blowup_class ? json(v.blowup_class->to_string()) : json(nullptr);
  return j;
}

inline json hypersurface_series_json(int m, std::size_t n) {
  auto e = verify_hypersurface_series(m, n);
  auto k = verify_koszul_series(m, n);
  return {{"m", m},
          {"n", n},
          {"csm_side", e.csm_side.to_string()},
          {"closed_form", e.closed_form.to_string()},
          {"equal", e.equal},
          {"koszul",
           {{"jacobian_class", k.jacobian_class.to_string()},
            {"derivation_class", k.derivation_class.to_string()},
            {"equal", k.equal}}}};
}

inline json projection_json(int d, int e, std::size_t n) {
  auto r = projection_formula_examples(d, e, n);
  return {{"d", d},
          {"e", e},
          {"n", n},
          {"O_X", {{"pushforward", r.ox_pushforward.to_string("h")},
                   {"capped", r.ox_capped.to_string("h")},
                   {"equal", r.ox_equal}}},
          {"O_Y", {{"pushforward", r.oy_pushforward.to_string("h")},
                   {"capped", r.oy_capped.to_string("h")},
                   {"equal", r.oy_equal}}}};
}

// ---------------------------------------------------------------------------
// text

inline std::string arrangement_text(const Arrangement& a) {
  std::ostringstream os;
  os << "arrangement: " << (a.name().empty() ? "(unnamed)" : a.name()) << " in P^" << a.dimension() << ", "
     << a.size() << " hyperplane(s), rank " << rank(a) << (is_essential(a) ? ", essential" : ", not essential")
     << "\n";
  for (std::size_t i = 0; i < a.size(); ++i) os << "  H" << i << ": " << a[i].to_string() << "\n";
  for (const auto& w : a.warnings()) os << "  warning: " << w << "\n";
  return os.str();
}

inline std::string lattice_text(const IntersectionLattice& lat) {
  std::ostringstream os;
  os << "intersection lattice: " << lat.size() << " flat(s), rank " << lat.rank() << "\n";
  for (std::size_t c = 0; c <= lat.rank(); ++c) {
    os << "  codim " << c << ":";
    for (const Flat* f : lat.flats_of_codim(c)) {
      os << " {";
      for (std::size_t i = 0; i < f->hyperplanes.size(); ++i) os << (i ? "," : "") << f->hyperplanes[i];
      os << "}:" << f->mobius;
    }
    os << "\n";
  }
  return os.str();
}

inline std::string charpoly_text(const IntPoly& chi, const std::vector<OracleCheck>& oracle) {
  std::ostringstream os;
  os << "characteristic polynomial: " << chi.to_string() << "\n";
  for (const auto& c : oracle) {
    os << "  p = " << c.prime << ": ";
    if (!c.error.empty()) {
      os << "skipped (" << c.error << ")\n";
      continue;
    }
    os << "points off the arrangement " << *c.count << ", reduced charpoly " << *c.expected
       << (c.ok() ? " (match)" : " (MISMATCH)") << "\n";
  }
  return os.str();
}

inline std::string csm_text(const CsmClass& c) { return "csm class of complement: " + c.to_string() + "\n"; }

inline std::string freeness_text(const FreenessReport& r) {
  std::ostringstream os;
  if (r.free) {
    os << "free: yes, exponents {";
    for (std::size_t i = 0; i < r.exponents.size(); ++i) os << (i ? "," : "") << r.exponents[i];
    os << "}\n  Saito determinant: " << r.determinant.to_string() << " = " << r.saito_scalar->get_str()
       << " * Q\n";
    for (const auto& w : r.witnesses) os << "  generator (degree " << w.degree() << "): " << w.to_string() << "\n";
  } else {
    os << "free: no (" << r.reason << ")\n";
  }
  for (const auto& l : r.log) os << "  log: " << l << "\n";
  return os.str();
}

inline std::string verification_text(const VerificationReport& v) {
  std::ostringstream os;
  const auto computed = v.computed_routes();
  os << "routes compared:";
  for (const auto& r : computed) os << " " << r;
  os << "\n";
  for (const auto& name : route_names()) {
    os << "  " << name << std::string(20 - name.size(), ' ');
    const auto& c = v.routes.at(name);
    if (c) os << c->to_string() << "\n";
    else os << "skipped (" << v.skipped.at(name) << ")\n";
  }
  if (v.blowup_class) os << "  blow-up class before pushforward: " << v.blowup_class->to_string() << "\n";
  for (const auto& [pair, eq] : v.agreement)
    os << "  " << pair.first << " vs " << pair.second << ": " << (eq ? "agree" : "DISAGREE") << "\n";
  os << "verdict: " << (v.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace csmarr::report
