#include "ordbell/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ordbell {

namespace {

constexpr int kMaxWeakOrderingN = 9;
constexpr int kMaxSetPartitionN = 12;
constexpr int kMaxLemmaN = 7;

void check_weak_ordering_ceiling(int n) {
  if (n < 0) throw std::domain_error("enumeration: n must be nonnegative");
  if (n > kMaxWeakOrderingN)
    throw std::domain_error("enumeration: n exceeds the weak-ordering ceiling");
}

}  // namespace

void enumerate_weak_orderings(int n,
                              const std::function<void(const WeakOrdering&)>& visit) {
  check_weak_ordering_ceiling(n);
  WeakOrdering w;
  // place element i into each existing block, then as a new block in each gap
  auto place = [&](auto&& self, int i) -> void {
    if (i == n) {
      visit(w);
      return;
    }
    // index, not iterator: the recursion reshapes w.blocks and restores it,
    // which invalidates iterators but keeps positions stable
    for (std::size_t b = 0; b < w.blocks.size(); ++b) {
      w.blocks[b].push_back(i);
      self(self, i + 1);
      w.blocks[b].pop_back();
    }
    for (std::size_t gap = 0; gap <= w.blocks.size(); ++gap) {
      w.blocks.insert(w.blocks.begin() + gap, {i});
      self(self, i + 1);
      w.blocks.erase(w.blocks.begin() + gap);
    }
  };
  place(place, 0);
}

std::uint64_t count_weak_orderings(int n) {
  std::uint64_t count = 0;
  enumerate_weak_orderings(n, [&](const WeakOrdering&) { ++count; });
  return count;
}

std::uint64_t count_rigged(int n, int r, RiggedMode mode) {
  if (r < 0 || r > n) throw std::domain_error("count_rigged: needs 0 <= r <= n");
  check_weak_ordering_ceiling(n);
  std::uint64_t count = 0;
  enumerate_weak_orderings(n, [&](const WeakOrdering& w) {
    int expected = 0;  // next marked element a prescribed ordering must meet
    for (const auto& block : w.blocks) {
      int marked = -1;
      for (int element : block) {
        if (element >= r) continue;
        if (marked >= 0) return;  // two marked elements tied
        marked = element;
      }
      if (marked < 0) continue;
      if (mode == RiggedMode::prescribed && marked != expected) return;
      ++expected;
    }
    ++count;
  });
  return count;
}

std::int64_t count_cycles_signed(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("count_cycles_signed: negative argument");
  if (n > kMaxWeakOrderingN)
    throw std::domain_error("count_cycles_signed: n exceeds the enumeration ceiling");
  if (n == 0) return k == 0 ? 1 : 0;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> seen(n);
  std::int64_t total = 0;
  do {
    std::fill(seen.begin(), seen.end(), false);
    int cycles = 0;
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      ++cycles;
      for (int j = start; !seen[j]; j = perm[j]) seen[j] = true;
    }
    if (cycles == k) total += ((n - k) % 2 == 0) ? 1 : -1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::uint64_t count_set_partitions(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("count_set_partitions: negative argument");
  if (n > kMaxSetPartitionN)
    throw std::domain_error("count_set_partitions: n exceeds the enumeration ceiling");

  // restricted growth strings: element i joins block b < used or opens block `used`
  std::uint64_t count = 0;
  auto place = [&](auto&& self, int i, int used) -> void {
    if (used > k || used + (n - i) < k) return;
    if (i == n) {
      count += (used == k) ? 1 : 0;
      return;
    }
    for (int b = 0; b < used; ++b) self(self, i + 1, used);
    self(self, i + 1, used + 1);
  };
  place(place, 0, 0);
  return count;
}

bool verify_counting_lemma(int n, int m) {
  if (m < 0 || m > n) throw std::domain_error("verify_counting_lemma: needs 0 <= m <= n");
  if (n > kMaxLemmaN)
    throw std::domain_error("verify_counting_lemma: n exceeds the enumeration ceiling");

  // direct count: first m pairwise untied, element n untied from each of them
  std::uint64_t direct = 0;
  enumerate_weak_orderings(n + 1, [&](const WeakOrdering& w) {
    for (const auto& block : w.blocks) {
      int marked = 0;
      bool newcomer = false;
      for (int element : block) {
        if (element < m) ++marked;
        if (element == n) newcomer = true;
      }
      if (marked > 1 || (newcomer && marked > 0)) return;
    }
    ++direct;
  });

  const std::uint64_t g_next = count_rigged(n + 1, m, RiggedMode::relative_strong);
  const std::uint64_t g_curr = count_rigged(n, m, RiggedMode::relative_strong);
  return direct == g_next - static_cast<std::uint64_t>(m) * g_curr;
}

}  // namespace ordbell
