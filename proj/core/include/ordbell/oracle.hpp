#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ordbell {

// One weak ordering of {0, ..., n-1}: blocks in finish order, each block the
// set of mutually tied elements. Blocks are nonempty and disjoint.
struct WeakOrdering {
  std::vector<std::vector<int>> blocks;
};

enum class RiggedMode {
  relative_strong,  // marked elements pairwise untied
  prescribed,       // marked elements untied and in fixed finish order
};

// Visits every ordered set partition of {0, ..., n-1} exactly once.
// Generation is by recursive insertion: element i either joins an existing
// block or opens a new block in any gap. Hard ceiling n <= 9.
void enumerate_weak_orderings(int n, const std::function<void(const WeakOrdering&)>& visit);

/// Total number of weak orderings of n elements, by enumeration.
std::uint64_t count_weak_orderings(int n);

// Counts weak orderings of n elements whose marked elements {0, ..., r-1}
// honor the given constraint. The choice of marked elements does not affect
// the count, so they are fixed to the first r.
std::uint64_t count_rigged(int n, int r, RiggedMode mode);

// Enumerates all n! permutations and counts those with exactly k cycles,
// signed by permutation parity (-1)^(n-k). Hard ceiling n <= 9.
std::int64_t count_cycles_signed(int n, int k);

// Enumerates unordered set partitions of n elements, counting those with
// exactly k blocks. Hard ceiling n <= 12.
std::uint64_t count_set_partitions(int n, int k);

// With G(j) the count of weak orderings of j elements whose first m are
// pairwise untied: checks by direct enumeration that weak orderings of n+1
// elements, with the first m pairwise untied and the added element untied
// from each of them, number exactly G(n+1) - m*G(n). Requires m <= n <= 7.
bool verify_counting_lemma(int n, int m);

}  // namespace ordbell
