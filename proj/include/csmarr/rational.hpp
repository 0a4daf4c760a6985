#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace csmarr {

// gmpxx keeps results of arithmetic canonical (lowest terms, positive
// denominator). Values built from strings are canonicalized in parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional sign on p). Returns nullopt on malformed
/// input or a zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer(num, true)) return std::nullopt;
  Integer n(std::string(strip_plus(num)));
  Integer d = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer(den, false)) return std::nullopt;
    d = Integer(std::string(den));
    if (d == 0) return std::nullopt;
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// Converts an integral rational to int64; throws when it is not integral or
/// does not fit.
inline std::int64_t to_int64(const Rational& r) {
  if (!is_integral(r)) throw std::logic_error("non-integral class coefficient " + r.get_str());
  const Integer& z = r.get_num();
  if (!z.fits_slong_p()) throw std::overflow_error("coefficient does not fit in 64 bits");
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace csmarr
