#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dcs {

using Rational = mpq_class;

// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& r);

// Accepts "p/q", "p", or a terminating decimal such as "0.05".
Rational parse_rational(std::string_view text);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

// Harmonic number H_k = 1 + 1/2 + ... + 1/k (H_0 = 0).
Rational harmonic(std::uint64_t k);

}  // namespace dcs
