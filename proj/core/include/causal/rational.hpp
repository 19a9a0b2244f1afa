#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace causal {

// Exact rational weight. GMP keeps values in lowest terms after arithmetic,
// but the two-argument constructor does not reduce: canonicalize() first.
using Rational = mpq_class;

// Accepts INT or INT/POSINT. Throws Error(SyntaxError) otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// 2^-n as an exact rational.
Rational inverse_power_of_two(unsigned n);

}  // namespace causal
