#include "ordbell/number_theory.hpp"

#include <numeric>
#include <stdexcept>

namespace ordbell {

Factorization factorize(std::uint64_t k) {
  if (k == 0) throw std::domain_error("factorize: modulus must be positive");
  Factorization result;
  result.modulus = k;
  for (std::uint64_t p = 2; p <= k / p; p += (p == 2) ? 1 : 2) {
    if (k % p != 0) continue;
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (k > 1) result.factors.push_back({k, 1});
  return result;
}

namespace {

std::uint64_t pow_u64(std::uint64_t base, unsigned exponent) {
  std::uint64_t value = 1;
  while (exponent--) value *= base;
  return value;
}

// phi(p^e) = p^(e-1) * (p - 1)
std::uint64_t totient_of_prime_power(const PrimePower& pp) {
  return pow_u64(pp.prime, pp.exponent - 1) * (pp.prime - 1);
}

// Eq-style three cases: lambda(2)=1, lambda(4)=2, lambda(2^e)=2^(e-2) for
// e >= 3; lambda(p^e) = phi(p^e) for odd p.
std::uint64_t carmichael_of_prime_power(const PrimePower& pp) {
  if (pp.prime == 2) {
    if (pp.exponent == 1) return 1;
    if (pp.exponent == 2) return 2;
    return std::uint64_t{1} << (pp.exponent - 2);
  }
  return totient_of_prime_power(pp);
}

}  // namespace

std::uint64_t euler_totient(std::uint64_t k) {
  std::uint64_t phi = 1;
  for (const PrimePower& pp : factorize(k).factors) phi *= totient_of_prime_power(pp);
  return phi;
}

std::uint64_t carmichael(std::uint64_t k) {
  std::uint64_t lambda = 1;
  for (const PrimePower& pp : factorize(k).factors)
    lambda = std::lcm(lambda, carmichael_of_prime_power(pp));
  return lambda;
}

unsigned max_prime_exponent(std::uint64_t k) {
  unsigned r = 0;
  for (const PrimePower& pp : factorize(k).factors) r = std::max(r, pp.exponent);
  return r;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mod_mul(result, base, m);
    base = mod_mul(base, base, m);
    exponent >>= 1;
  }
  return result;
}

bool verify_exponent_properties(std::uint64_t k) {
  if (k < 2) throw std::domain_error("verify_exponent_properties: needs k >= 2");
  const std::uint64_t lambda = carmichael(k);
  const unsigned r = max_prime_exponent(k);
  for (std::uint64_t a = 0; a < k; ++a) {
    if (mod_pow(a, r, k) != mod_pow(a, lambda + r, k)) return false;
    if (std::gcd(a, k) == 1 && mod_pow(a, lambda, k) != 1) return false;
  }
  return true;
}

}  // namespace ordbell
