#pragma once

#include <cstdint>
#include <vector>

namespace ordbell {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Unique prime-power decomposition of a positive modulus. Primes are stored
// strictly increasing; the factor list is empty exactly when modulus == 1.
struct Factorization {
  std::uint64_t modulus = 1;
  std::vector<PrimePower> factors;
};

/// Trial-division factorization. Throws std::domain_error for k == 0.
Factorization factorize(std::uint64_t k);

/// Count of integers in [1, k] coprime to k, from the factorization.
std::uint64_t euler_totient(std::uint64_t k);

/// Exponent of the multiplicative group mod k:
///   phi(k)     for k in {1, 2, 4} and odd prime powers,
///   phi(k)/2   for k = 2^e, e >= 3,
///   lcm over the prime-power parts otherwise.
std::uint64_t carmichael(std::uint64_t k);

/// Largest exponent in the prime factorization of k; 0 for k == 1.
unsigned max_prime_exponent(std::uint64_t k);

/// Exhaustively checks, for R = max_prime_exponent(k) and L = carmichael(k),
/// that a^R == a^(L+R) (mod k) for every a in [0, k) and b^L == 1 (mod k)
/// for every b coprime to k. Intended for k <= ~10^4. Requires k >= 2.
bool verify_exponent_properties(std::uint64_t k);

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

}  // namespace ordbell
