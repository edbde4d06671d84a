#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ricci_orbit {

// Exact rational scalar. mpq_class keeps numerator/denominator canonical
// (coprime, positive denominator) after every arithmetic operation.
using BigRational = mpq_class;
using BigInteger = mpz_class;

// Parses "p", "-p", "p/q" or a finite decimal such as "1.25". Throws
// InvalidInput on anything else or on a zero denominator.
BigRational parse_rational(std::string_view text);

// "p/q", or "p" when q == 1.
std::string to_string(const BigRational& value);

inline int sign(const BigRational& value) { return sgn(value); }

inline BigRational abs_value(const BigRational& value) { return abs(value); }

}  // namespace ricci_orbit
