#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace ordbell {

// Raised when a measured residue sequence contradicts a proven period or
// onset bound. This never happens for correct code; it signals a bug.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PeriodScan {
  std::size_t onset = 0;
  std::size_t period = 1;
};

// Measured modular periodicity of F(n) (r == 0) or F_r(n) (r > 0) mod K,
// together with the bounds it is checked against.
struct PeriodReport {
  std::uint64_t modulus = 0;
  unsigned r = 0;
  std::size_t onset = 0;   // minimal onset, absolute sequence index
  std::size_t period = 1;  // minimal eventual period
  std::uint64_t carmichael = 1;
  unsigned max_exponent = 0;  // largest exponent in the factorization of K
  bool period_divides_carmichael = false;
  bool onset_within_bound = false;
};

// F(n) mod K for n < count, by residue-only arithmetic: the second-kind
// Stirling row is carried mod K and folded against k! mod K, truncated at
// k < K where the factorials vanish. O(count * K) word operations; no big
// integers regardless of n.
std::vector<std::uint64_t> fubini_mod_sequence(std::uint64_t modulus, std::size_t count);

/// Residues of F_r(n) mod K for r <= n < count; entry i holds F_r(r+i) mod K.
std::vector<std::uint64_t> fubini_r_mod_sequence(std::uint64_t modulus, unsigned r,
                                                 std::size_t count);

// Minimal eventual period and onset of a residue sequence. The period is the
// smallest divisor of lambda_k that holds from onset_bound to the end of the
// window, the onset the smallest index from which it holds. The window must
// cover onset_bound + 2*lambda_k + 16 entries. Throws TheoremViolation when
// no divisor of lambda_k works, since some divisor is guaranteed.
PeriodScan detect_eventual_period(std::span<const std::uint64_t> residues,
                                  std::uint64_t lambda_k, std::size_t onset_bound);

// Full periodicity analysis of F mod K (r == 0) or F_r mod K (r > 0) with a
// window sized from the bounds. For odd K with r == 0 the measured period is
// additionally required to equal carmichael(K) exactly. Requires K >= 2.
PeriodReport analyze(std::uint64_t modulus, unsigned r);

}  // namespace ordbell
