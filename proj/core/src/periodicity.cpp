#include "ordbell/periodicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordbell/number_theory.hpp"
#include "ordbell/stirling.hpp"

namespace ordbell {

namespace {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

std::vector<std::uint64_t> divisors_ascending(std::uint64_t n) {
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d != n / d) divisors.push_back(n / d);
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

bool holds_from(std::span<const std::uint64_t> seq, std::size_t from, std::uint64_t period) {
  for (std::size_t i = from; i + period < seq.size(); ++i)
    if (seq[i] != seq[i + period]) return false;
  return true;
}

}  // namespace

std::vector<std::uint64_t> fubini_mod_sequence(std::uint64_t modulus, std::size_t count) {
  if (modulus == 0) throw std::domain_error("fubini_mod_sequence: modulus must be positive");
  if (count == 0) throw std::domain_error("fubini_mod_sequence: count must be positive");
  std::vector<std::uint64_t> out(count, 0);
  if (modulus == 1) return out;

  // Stirling row S(n,k) mod K, truncated at k < K where k! vanishes mod K.
  const std::size_t width =
      static_cast<std::size_t>(std::min<std::uint64_t>(modulus, count));
  std::vector<std::uint64_t> row(width, 0), factorial(width, 0);
  row[0] = 1;
  factorial[0] = 1;
  for (std::size_t k = 1; k < width; ++k)
    factorial[k] = mod_mul(factorial[k - 1], k % modulus, modulus);

  for (std::size_t n = 0; n < count; ++n) {
    if (n > 0) {
      // S(n,k) = k * S(n-1,k) + S(n-1,k-1), descending so the row updates in place
      const std::size_t top = std::min(n, width - 1);
      for (std::size_t k = top; k >= 1; --k)
        row[k] = mod_add(mod_mul(k % modulus, row[k], modulus), row[k - 1], modulus);
      row[0] = 0;
    }
    std::uint64_t sum = 0;
    const std::size_t top = std::min(n, width - 1);
    for (std::size_t k = 0; k <= top; ++k)
      sum = mod_add(sum, mod_mul(row[k], factorial[k], modulus), modulus);
    out[n] = sum;
  }
  return out;
}

std::vector<std::uint64_t> fubini_r_mod_sequence(std::uint64_t modulus, unsigned r,
                                                 std::size_t count) {
  if (count <= r) throw std::domain_error("fubini_r_mod_sequence: count must exceed r");
  const std::vector<std::uint64_t> base = fubini_mod_sequence(modulus, count);
  if (modulus == 1) return std::vector<std::uint64_t>(count - r, 0);

  // s(r, r-j) mod K, j = 0..r, as nonnegative residues
  const std::vector<BigInt> expansion = falling_factorial_coefficients(r);
  std::vector<std::uint64_t> coeff(r + 1);
  for (unsigned j = 0; j <= r; ++j)
    coeff[j] = mpz_fdiv_ui(expansion[r - j].get_mpz_t(), modulus);

  std::vector<std::uint64_t> out(count - r);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t n = r + i;
    std::uint64_t sum = 0;
    for (unsigned j = 0; j <= r; ++j)
      sum = mod_add(sum, mod_mul(coeff[j], base[n - j], modulus), modulus);
    out[i] = sum;
  }
  return out;
}

PeriodScan detect_eventual_period(std::span<const std::uint64_t> residues,
                                  std::uint64_t lambda_k, std::size_t onset_bound) {
  if (lambda_k == 0)
    throw std::domain_error("detect_eventual_period: lambda must be positive");
  const std::size_t window = onset_bound + 2 * static_cast<std::size_t>(lambda_k) + 16;
  if (residues.size() < window)
    throw std::invalid_argument("detect_eventual_period: window too short");

  for (std::uint64_t d : divisors_ascending(lambda_k)) {
    if (!holds_from(residues, onset_bound, d)) continue;
    // minimal onset: extend the relation backwards while it keeps holding
    std::size_t onset = onset_bound;
    while (onset > 0 && residues[onset - 1] == residues[onset - 1 + d]) --onset;
    return {onset, static_cast<std::size_t>(d)};
  }
  throw TheoremViolation(
      "no divisor of lambda(K) is a period from the guaranteed onset; "
      "this contradicts the Carmichael bound and signals a bug");
}

PeriodReport analyze(std::uint64_t modulus, unsigned r) {
  if (modulus < 2) throw std::domain_error("analyze: modulus must be at least 2");
  PeriodReport report;
  report.modulus = modulus;
  report.r = r;
  report.carmichael = carmichael(modulus);
  report.max_exponent = max_prime_exponent(modulus);

  const std::size_t lambda = static_cast<std::size_t>(report.carmichael);
  // onset bound in absolute n: R for F, r-1+R for F_r; the residue list for
  // F_r starts at n = r, so its local bound is R-1 (R >= 1 for K >= 2).
  const std::size_t bound_abs =
      (r == 0) ? report.max_exponent : r - 1 + report.max_exponent;
  const std::size_t bound_local = bound_abs - (r == 0 ? 0 : r);
  const std::size_t window = bound_local + 2 * lambda + 16;

  const std::vector<std::uint64_t> residues =
      (r == 0) ? fubini_mod_sequence(modulus, window)
               : fubini_r_mod_sequence(modulus, r, r + window);
  const PeriodScan scan = detect_eventual_period(residues, report.carmichael, bound_local);

  report.onset = scan.onset + (r == 0 ? 0 : r);
  report.period = scan.period;
  report.period_divides_carmichael = report.carmichael % report.period == 0;
  report.onset_within_bound = report.onset <= bound_abs;

  if (r == 0 && modulus % 2 == 1 && report.period != lambda)
    throw TheoremViolation(
        "odd modulus measured a period different from lambda(K); "
        "this contradicts the exactness theorem and signals a bug");
  return report;
}

}  // namespace ordbell
