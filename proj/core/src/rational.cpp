#include "causal/rational.hpp"

#include <cctype>

#include "causal/error.hpp"

namespace causal {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits))
    throw Error(ErrorCode::SyntaxError,
                "malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(mpz_class(std::string(num)));

  std::string_view den = text.substr(slash + 1);
  if (!all_digits(den))
    throw Error(ErrorCode::SyntaxError,
                "malformed rational '" + std::string(text) + "'");
  mpz_class d(std::string{den});
  if (d == 0)
    throw Error(ErrorCode::SyntaxError,
                "zero denominator in '" + std::string(text) + "'");
  Rational r(mpz_class(std::string(num)), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational inverse_power_of_two(unsigned n) {
  mpz_class den = 1;
  den <<= n;
  return Rational(mpz_class(1), den);
}

}  // namespace causal
