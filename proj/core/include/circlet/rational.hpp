#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace circlet {

// Exact rational arithmetic. mpq_class keeps values normalized with a
// positive denominator as long as every construction path canonicalizes.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" in lowest terms; integers print without a denominator.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Always "p/q", even for integers. Used by the text file format.
std::string to_fraction_string(const Rational& r);

// Strict parser for "-?[0-9]+(/[0-9]+)?" with a positive denominator.
std::optional<Rational> parse_rational(std::string_view text);

// Converts an integral rational to int64, throwing DomainError otherwise.
std::int64_t to_int64(const Rational& r);

}  // namespace circlet
