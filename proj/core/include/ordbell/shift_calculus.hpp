#pragma once

#include <map>

#include "ordbell/bigint.hpp"
#include "ordbell/sequences.hpp"

namespace ordbell {

// Finite integer-coefficient polynomial in the sequence shift operator:
// a sparse map offset -> coefficient. The term {1 -> 1} is the single right
// shift, {0 -> 1} the identity, the empty map the zero operator. Offsets may
// be negative; zero coefficients are never stored.
class ShiftPolynomial {
 public:
  ShiftPolynomial() = default;  // zero operator

  static ShiftPolynomial identity();
  static ShiftPolynomial term(int offset, BigInt coefficient);

  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int offset) const;
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const ShiftPolynomial&, const ShiftPolynomial&) = default;

 private:
  void add_term(int offset, const BigInt& coefficient);

  std::map<int, BigInt> terms_;

  friend ShiftPolynomial compose(const ShiftPolynomial& p, const ShiftPolynomial& q);
  friend ShiftPolynomial operator+(const ShiftPolynomial& p, const ShiftPolynomial& q);
};

/// Operator product: offsets add, coefficients multiply and accumulate.
ShiftPolynomial compose(const ShiftPolynomial& p, const ShiftPolynomial& q);

ShiftPolynomial operator+(const ShiftPolynomial& p, const ShiftPolynomial& q);

// The normalized falling factorial of the shift operator,
//   E (E - 1I) (E - 2I) ... (E - (r-1)I) E^(-r),
// whose coefficient at offset j - r is s(r,j). Offsets span [-r, 0].
ShiftPolynomial falling_factorial_operator(unsigned r);

// Applies the operator at index n: sum of coefficient(j) * seq(n + j).
// Shifting below the sequence's first defined index is a domain error;
// shifting past its computed prefix is out of range.
BigInt apply(const ShiftPolynomial& p, const BigSequence& seq, std::size_t n);

}  // namespace ordbell
