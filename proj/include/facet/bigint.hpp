#pragma once

#include <gmpxx.h>
#include <string>

namespace facet {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_decimal(const Int& n) { return n.get_str(); }

// Decimal rendering of a rational with the given number of fractional
// digits, truncated toward zero.
std::string to_decimal(const Rat& q, unsigned digits);

}  // namespace facet
