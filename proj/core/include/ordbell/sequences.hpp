#pragma once

#include <cstddef>
#include <vector>

#include "ordbell/bigint.hpp"

namespace ordbell {

enum class SequenceKind {
  factorial,  // n!
  fubini,     // F(n), weak orderings of n elements
  fubini_r,   // F_r(n), weak orderings with r marked elements pairwise untied
  horse_r,    // H_r(n) = F_r(n) / r!, marked elements in one fixed order
};

// Exact integer sequence, computed incrementally and cached. Extension only
// appends: once an index is computed its value never changes, so a computed
// prefix is safe for concurrent reads. Rigged kinds start at index r (the
// counts are not meaningful below it).
class BigSequence {
 public:
  explicit BigSequence(SequenceKind kind, unsigned r = 0);

  SequenceKind kind() const { return kind_; }
  unsigned r() const { return r_; }

  /// First defined index: 0, or r for the rigged kinds.
  std::size_t start() const;
  /// One past the last computed index.
  std::size_t end() const { return start() + values_.size(); }

  /// Value at index n. Throws std::domain_error below start() and
  /// std::out_of_range beyond the computed prefix.
  const BigInt& at(std::size_t n) const;

  /// Computes and appends values so every index below n_end is available.
  void extend_to(std::size_t n_end);

 private:
  SequenceKind kind_;
  unsigned r_;
  std::vector<BigInt> values_;  // values_[i] holds index start() + i

  friend BigSequence fubini_alternating(std::size_t count);
  friend BigSequence transform_strong_to_weak(const BigSequence& factorial_seq,
                                              std::size_t count);
  friend BigSequence transform_weak_to_strong(const BigSequence& fubini_seq,
                                              std::size_t count);
};

/// n! for n < count.
BigSequence factorials(std::size_t count);

/// F(n) for n < count via the second-kind Stirling transform of factorials.
BigSequence fubini(std::size_t count);

// F(n) for n < count via the alternating recurrence
//   F(n) = n! - sum_{j=1..n} s(n,n-j) F(n-j),
// entrywise equal to fubini(count).
BigSequence fubini_alternating(std::size_t count);

// F_r(n) as the first-kind Stirling weighted sum of shifted Fubini numbers,
//   F_r(n) = sum_{j=0..r} s(r,r-j) F(n-j).
// Requires n >= r; smaller n is a domain error, not zero.
BigInt fubini_r(std::size_t n, unsigned r);

/// H_r(n) = F_r(n) / r!, the division checked exact. Requires n >= r.
BigInt horse_r(std::size_t n, unsigned r);

BigSequence fubini_r_sequence(unsigned r, std::size_t count);
BigSequence horse_r_sequence(unsigned r, std::size_t count);

// Second-kind Stirling matrix applied to the first count entries of the
// factorial vector; yields F(n) for n < count. The input must be a factorial
// sequence holding at least count entries.
BigSequence transform_strong_to_weak(const BigSequence& factorial_seq,
                                     std::size_t count);

/// Inverse transform: first-kind matrix applied to Fubini values; yields n!.
BigSequence transform_weak_to_strong(const BigSequence& fubini_seq,
                                     std::size_t count);

}  // namespace ordbell
