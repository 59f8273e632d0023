#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbp {

// Every geometric predicate in this library compares sums of side lengths
// against 1 with <=, and the interesting cases sit exactly on the
// boundary, so floating point is unusable. GMP rationals stay canonical
// (denominator > 0, gcd(|num|, den) = 1) under arithmetic as long as they
// are built canonical; the helpers below are the only construction paths.
using rational = mpq_class;

inline rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  rational r(num, den);
  r.canonicalize();
  return r;
}

namespace detail {
inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
}  // namespace detail

// Accepts "p/q" or "p" with an optional leading '-'. No decimals, no
// whitespace: decimal parsing would reintroduce silent inexactness.
inline rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!detail::is_integer_literal(num_part))
    throw std::invalid_argument("rational: bad literal '" + std::string(text) + "'");
  mpz_class num(std::string(num_part), 10);
  if (slash == std::string_view::npos) return rational(num);
  std::string_view den_part = text.substr(slash + 1);
  if (!detail::is_integer_literal(den_part))
    throw std::invalid_argument("rational: bad literal '" + std::string(text) + "'");
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(text) + "'");
  rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const rational& r) { return r.get_str(); }

}  // namespace gbp
