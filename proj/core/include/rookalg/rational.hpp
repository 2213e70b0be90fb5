#pragma once

#include <gmpxx.h>

#include <string>

namespace rookalg {

using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument
/// on malformed input or zero denominator.
Rat ratParse(const std::string& text);

/// Formats as "p" or "p/q" (canonical form, q > 0).
std::string ratStr(const Rat& value);

Int factorialInt(long n);
Int binomialInt(long n, long k);

/// Falling factorial n(n-1)...(n-k+1).
Int fallingInt(long n, long k);

}  // namespace rookalg
