#pragma once

#include "csmarr/arrangement.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace csmarr::testing {

inline Arrangement make(std::size_t vars, std::initializer_list<std::initializer_list<long>> forms,
                        std::string name = {}) {
  Arrangement a(vars, std::move(name));
  for (const auto& f : forms) {
    std::vector<Rational> c;
    for (long v : f) c.emplace_back(v);
    a.add(std::move(c));
  }
  return a;
}

inline Arrangement boolean_triangle() { return make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "boolean_triangle"); }
inline Arrangement three_concurrent() { return make(3, {{0, 1, 0}, {0, 0, 1}, {0, 1, 1}}, "three_concurrent"); }
inline Arrangement generic4() { return make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, "generic4"); }
inline Arrangement two_lines() { return make(3, {{1, 0, 0}, {0, 1, 0}}, "two_lines"); }
inline Arrangement single_line() { return make(3, {{1, 0, 0}}, "single_line"); }
inline Arrangement empty_plane() { return Arrangement(3, "empty"); }
inline Arrangement tetrahedron() {
  return make(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, "tetrahedron");
}
inline Arrangement generic5_p3() {
  return make(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}}, "generic5_p3");
}
inline Arrangement braid6() {
  return make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}}, "braid6");
}
/// m lines: x0 plus m-1 lines through [1:0:0].
inline Arrangement near_pencil(int m) {
  Arrangement a(3, "near_pencil_" + std::to_string(m));
  a.add({1, 0, 0});
  a.add({0, 1, 0});
  a.add({0, 0, 1});
  for (int i = 1; i <= m - 3; ++i) a.add({0, 1, i});
  return a;
}

/// x_i as a polynomial in k variables.
inline MultiPoly x(std::size_t k, std::size_t i) { return MultiPoly::variable(k, i); }

}  // namespace csmarr::testing
