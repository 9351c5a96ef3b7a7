#pragma once

#include <gmpxx.h>

#include <string>

namespace ordbell {

// Exact arbitrary-precision integer. Weak-ordering counts overflow 64 bits
// already at n = 16, so every counting value in the library is a BigInt.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(); }

}  // namespace ordbell
