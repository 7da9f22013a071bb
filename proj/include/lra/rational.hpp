#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lra {

/// Exact rational scalar. GMP keeps every value canonical (reduced, positive
/// denominator) after each arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "12", "-3", "7/4". Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "': zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace lra
