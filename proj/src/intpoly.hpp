#pragma once

// Integer-coefficient helpers shared by the polynomial and Sturm code.

#include <cstdint>
#include <vector>

#include "ricci_orbit/poly.hpp"

namespace ricci_orbit::detail {

using IntPoly = std::vector<BigInteger>;

void trim(IntPoly& p);

// Positive rational multiple of p with coprime integer coefficients.
IntPoly to_primitive_ints(const Poly& p);

// Divides out the (positive) content.
void make_primitive(IntPoly& p);

Poly from_ints(const IntPoly& p);

// Pseudo-remainder of a by b, primitive. Only defined up to sign.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b);

// Positive multiple of the remainder of a by b, primitive.
IntPoly signed_remainder(IntPoly a, const IntPoly& b);

// Sign of p(num / den) for den > 0.
int sign_at(const IntPoly& p, const BigInteger& num, const BigInteger& den);

// True when p and q are certainly coprime, decided by Euclid modulo a few
// word-size primes. False means "unknown".
bool coprime_mod_primes(const IntPoly& p, const IntPoly& q);

}  // namespace ricci_orbit::detail
