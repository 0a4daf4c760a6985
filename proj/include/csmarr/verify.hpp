#pragma once

#include "csmarr/arrangement.hpp"
#include "csmarr/chow.hpp"
#include "csmarr/lattice.hpp"
#include "csmarr/logder.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace csmarr {

inline constexpr const char* kRouteLatticeCsm = "lattice_csm";
inline constexpr const char* kRouteExponentProduct = "exponent_product";
inline constexpr const char* kRouteTjurina = "tjurina";
inline constexpr const char* kRouteBlowupPushforward = "blowup_pushforward";

inline const std::vector<std::string>& route_names() {
  static const std::vector<std::string> names{kRouteLatticeCsm, kRouteExponentProduct, kRouteTjurina,
                                              kRouteBlowupPushforward};
  return names;
}

struct VerificationReport {
  std::string label;
  std::size_t dimension = 0;
  std::map<std::string, std::optional<CsmClass>> routes;  // null when the route does not apply
  std::map<std::string, std::string> skipped;             // route -> why it was skipped
  std::optional<BlowupSurfaceClass> blowup_class;         // before pushforward
  std::optional<FreenessReport> freeness;
  std::map<std::pair<std::string, std::string>, bool> agreement;
  bool pass = false;

  std::vector<std::string> computed_routes() const {
    std::vector<std::string> out;
    for (const auto& name : route_names())
      if (auto it = routes.find(name); it != routes.end() && it->second) out.push_back(name);
    return out;
  }
};

/// Runs every applicable route for c(Der(D)) ∩ [P^n] = c_SM(1_{P^n \ D}):
/// lattice inclusion-exclusion always; the exponent product when A is free
/// and nonempty; the Tjurina and blow-up routes on P^2.
inline VerificationReport verify_routes(const Arrangement& a) {
  VerificationReport rep;
  rep.label = a.name();
  rep.dimension = a.dimension();
  for (const auto& name : route_names()) rep.routes[name] = std::nullopt;

  rep.routes[kRouteLatticeCsm] = csm_complement(a);

  FreenessReport fr = decide_freeness(a);
  if (a.empty()) {
    rep.skipped[kRouteExponentProduct] = "empty arrangement";
  } else if (!fr.free) {
    rep.skipped[kRouteExponentProduct] = "not free: " + fr.reason;
  } else {
    rep.routes[kRouteExponentProduct] = chern_class_free(fr);
  }
  rep.freeness = std::move(fr);

  if (a.num_vars() == 3) {
    rep.routes[kRouteTjurina] = tjurina_route(a);
    rep.blowup_class = blowup_chern_snc(a);
    rep.routes[kRouteBlowupPushforward] = pushforward(*rep.blowup_class);
  } else {
    rep.skipped[kRouteTjurina] = "only implemented on P^2";
    rep.skipped[kRouteBlowupPushforward] = "only implemented on P^2";
  }

  rep.pass = true;
  const auto computed = rep.computed_routes();
  for (std::size_t i = 0; i < computed.size(); ++i)
    for (std::size_t j = i + 1; j < computed.size(); ++j) {
      const bool eq = *rep.routes[computed[i]] == *rep.routes[computed[j]];
      rep.agreement[{computed[i], computed[j]}] = eq;
      rep.pass = rep.pass && eq;
    }
  return rep;
}

}  // namespace csmarr
