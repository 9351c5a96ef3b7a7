#include "ordbell/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ordbell/bigint.hpp"
#include "ordbell/number_theory.hpp"
#include "ordbell/oracle.hpp"
#include "ordbell/periodicity.hpp"
#include "ordbell/sequences.hpp"
#include "ordbell/shift_calculus.hpp"
#include "ordbell/stirling.hpp"

namespace ordbell {

namespace {

// Counts comparisons and remembers the first counterexample.
class Check {
 public:
  void expect(bool condition, const std::string& context) {
    ++comparisons_;
    if (!condition && failure_.empty()) failure_ = context;
  }

  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& context) {
    ++comparisons_;
    if (got == want || !failure_.empty()) return;
    std::ostringstream os;
    os << context << ": got " << got << ", want " << want;
    failure_ = os.str();
  }

  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::size_t comparisons() const { return comparisons_; }

 private:
  std::size_t comparisons_ = 0;
  std::string failure_;
};

void run_check(std::vector<CheckResult>& out, const std::string& name,
               const std::function<void(Check&)>& body) {
  Check check;
  CheckResult result;
  result.name = name;
  try {
    body(check);
    result.passed = check.ok();
    result.detail = check.ok() ? std::to_string(check.comparisons()) + " comparisons"
                               : check.failure();
  } catch (const std::exception& error) {
    result.passed = false;
    result.detail = std::string("exception: ") + error.what();
  }
  out.push_back(std::move(result));
}

// Per-check ceiling: the suite limit tightens defaults, never raises them.
std::size_t cap(std::optional<std::size_t> limit, std::size_t fallback) {
  return limit ? std::min(*limit, fallback) : fallback;
}

std::string pair_context(const char* head, std::size_t a, std::size_t b) {
  std::ostringstream os;
  os << head << "(" << a << "," << b << ")";
  return os.str();
}

std::vector<CheckResult> run_oracle(std::optional<std::size_t> limit) {
  std::vector<CheckResult> out;

  run_check(out, "oracle/fubini_vs_enumeration", [&](Check& c) {
    const std::size_t n_max = cap(limit, 8);
    const BigSequence f = fubini(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
      c.equal(f.at(n),
              BigInt(static_cast<unsigned long>(count_weak_orderings(static_cast<int>(n)))),
              "F(" + std::to_string(n) + ")");
  });

  run_check(out, "oracle/rigged_vs_enumeration", [&](Check& c) {
    const std::size_t n_max = cap(limit, 7);
    for (std::size_t n = 0; n <= n_max; ++n)
      for (unsigned r = 0; r <= n; ++r) {
        const auto untied = count_rigged(static_cast<int>(n), static_cast<int>(r),
                                         RiggedMode::relative_strong);
        const auto ordered = count_rigged(static_cast<int>(n), static_cast<int>(r),
                                          RiggedMode::prescribed);
        c.equal(fubini_r(n, r), BigInt(static_cast<unsigned long>(untied)),
                pair_context("F_r", n, r));
        c.equal(horse_r(n, r), BigInt(static_cast<unsigned long>(ordered)),
                pair_context("H_r", n, r));
      }
  });

  run_check(out, "oracle/prescribed_scaling", [&](Check& c) {
    const std::size_t n_max = cap(limit, 7);
    for (std::size_t n = 0; n <= n_max; ++n)
      for (unsigned r = 0; r <= n; ++r) {
        BigInt r_factorial;
        mpz_fac_ui(r_factorial.get_mpz_t(), r);
        const auto untied = count_rigged(static_cast<int>(n), static_cast<int>(r),
                                         RiggedMode::relative_strong);
        const auto ordered = count_rigged(static_cast<int>(n), static_cast<int>(r),
                                          RiggedMode::prescribed);
        c.equal(BigInt(static_cast<unsigned long>(untied)),
                r_factorial * static_cast<unsigned long>(ordered),
                pair_context("r!-scaling at", n, r));
      }
  });

  run_check(out, "oracle/cycles_vs_stirling_first", [&](Check& c) {
    const std::size_t n_max = cap(limit, 7);
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t k = 0; k <= n; ++k)
        c.equal(BigInt(static_cast<long>(
                    count_cycles_signed(static_cast<int>(n), static_cast<int>(k)))),
                stirling_first_signed(n, k), pair_context("s", n, k));
  });

  run_check(out, "oracle/partitions_vs_stirling_second", [&](Check& c) {
    const std::size_t n_max = cap(limit, 10);
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t k = 0; k <= n; ++k)
        c.equal(BigInt(static_cast<unsigned long>(
                    count_set_partitions(static_cast<int>(n), static_cast<int>(k)))),
                stirling_second(n, k), pair_context("S", n, k));
  });

  run_check(out, "oracle/no_duplicate_orderings", [&](Check& c) {
    const std::size_t n_max = cap(limit, 6);
    for (std::size_t n = 0; n <= n_max; ++n) {
      std::unordered_set<std::string> seen;
      std::uint64_t total = 0;
      enumerate_weak_orderings(static_cast<int>(n), [&](const WeakOrdering& w) {
        std::ostringstream os;
        for (const auto& block : w.blocks) {
          for (int element : block) os << element << ',';
          os << '|';
        }
        seen.insert(os.str());
        ++total;
      });
      c.equal(static_cast<std::uint64_t>(seen.size()), total,
              "distinct orderings at n=" + std::to_string(n));
    }
  });

  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

std::vector<CheckResult> run_matrix(std::optional<std::size_t> limit) {
  std::vector<CheckResult> out;

  run_check(out, "matrix/inverse_pair", [&](Check& c) {
    const std::size_t n_max = std::max<std::size_t>(cap(limit, 30), 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const TriangularMatrix first = stirling_matrix(StirlingKind::first_signed, n);
      const TriangularMatrix second = stirling_matrix(StirlingKind::second, n);
      const TriangularMatrix id = identity_matrix(n);
      c.expect(matrix_product(first, second) == id,
               "s*S != I at N=" + std::to_string(n));
      c.expect(matrix_product(second, first) == id,
               "S*s != I at N=" + std::to_string(n));
    }
  });

  run_check(out, "matrix/first_kind_recurrence", [&](Check& c) {
    // s(n+1,k) = s(n,k-1) - n*s(n,k) against the polynomial expansion
    const std::size_t n_max = cap(limit, 30);
    std::vector<BigInt> row{BigInt(1)};
    for (std::size_t n = 0; n <= n_max; ++n) {
      const std::vector<BigInt> expanded = falling_factorial_coefficients(n);
      for (std::size_t k = 0; k <= n; ++k)
        c.equal(expanded[k], row[k], pair_context("s", n, k));
      std::vector<BigInt> next(n + 2, BigInt(0));
      for (std::size_t k = 0; k <= n + 1; ++k) {
        if (k > 0) next[k] += row[k - 1];
        if (k <= n) next[k] -= BigInt(static_cast<unsigned long>(n)) * row[k];
      }
      row = std::move(next);
    }
  });

  run_check(out, "matrix/second_kind_recurrence", [&](Check& c) {
    // S(n+1,k) = S(n,k-1) + k*S(n,k) against the explicit alternating sum
    const std::size_t n_max = cap(limit, 30);
    std::vector<BigInt> row{BigInt(1)};
    for (std::size_t n = 0; n <= n_max; ++n) {
      for (std::size_t k = 0; k <= n; ++k)
        c.equal(stirling_second(n, k), row[k], pair_context("S", n, k));
      std::vector<BigInt> next(n + 2, BigInt(0));
      for (std::size_t k = 0; k <= n + 1; ++k) {
        if (k > 0) next[k] += row[k - 1];
        if (k <= n) next[k] += BigInt(static_cast<unsigned long>(k)) * row[k];
      }
      row = std::move(next);
    }
  });

  run_check(out, "matrix/sign_structure", [&](Check& c) {
    const std::size_t n_max = cap(limit, 20);
    for (std::size_t n = 0; n <= n_max; ++n) {
      const std::vector<BigInt> row = falling_factorial_coefficients(n);
      for (std::size_t k = 0; k <= n; ++k) {
        const int expected_sign = ((n - k) % 2 == 0) ? 1 : -1;
        c.expect(row[k] == 0 || sgn(row[k]) == expected_sign, pair_context("s", n, k));
      }
    }
  });

  run_check(out, "matrix/transform_round_trip", [&](Check& c) {
    const std::size_t count = std::max<std::size_t>(cap(limit, 60), 1);
    const BigSequence f = factorials(count);
    const BigSequence weak = transform_strong_to_weak(f, count);
    const BigSequence strong = transform_weak_to_strong(weak, count);
    const BigSequence expected_weak = fubini(count);
    for (std::size_t n = 0; n < count; ++n) {
      c.equal(weak.at(n), expected_weak.at(n), "transform F(" + std::to_string(n) + ")");
      c.equal(strong.at(n), f.at(n), "round trip at n=" + std::to_string(n));
    }
  });

  run_check(out, "matrix/fubini_dual_path", [&](Check& c) {
    const std::size_t count = std::max<std::size_t>(cap(limit, 120), 1);
    const BigSequence direct = fubini(count);
    const BigSequence alternating = fubini_alternating(count);
    for (std::size_t n = 0; n < count; ++n)
      c.equal(alternating.at(n), direct.at(n), "F(" + std::to_string(n) + ")");
  });

  run_check(out, "matrix/operator_sum_equality", [&](Check& c) {
    const std::size_t n_max = cap(limit, 25);
    const BigSequence f = fubini(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
      for (unsigned r = 0; r <= n; ++r)
        c.equal(apply(falling_factorial_operator(r), f, n), fubini_r(n, r),
                pair_context("F_r", n, r));
  });

  run_check(out, "matrix/rigged_divisibility", [&](Check& c) {
    const std::size_t n_max = cap(limit, 25);
    const BigSequence f = fubini(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
      for (unsigned r = 0; r <= n; ++r) {
        BigInt r_factorial;
        mpz_fac_ui(r_factorial.get_mpz_t(), r);
        const BigInt value = apply(falling_factorial_operator(r), f, n);
        c.expect(mpz_divisible_p(value.get_mpz_t(), r_factorial.get_mpz_t()) != 0,
                 pair_context("r! does not divide F_r", n, r));
      }
  });

  run_check(out, "matrix/boundary_values", [&](Check& c) {
    for (unsigned r = 0; r <= cap(limit, 12); ++r)
      c.equal(horse_r(r, r), BigInt(1), "H_r(r) at r=" + std::to_string(r));
    const std::size_t n_max = cap(limit, 20);
    const BigSequence f = fubini(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
      c.equal(fubini_r(n, 0), f.at(n), "F_0(" + std::to_string(n) + ")");
      if (n >= 1) c.equal(fubini_r(n, 1), f.at(n), "F_1(" + std::to_string(n) + ")");
    }
  });

  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

std::vector<CheckResult> run_periodicity(std::optional<std::size_t> limit) {
  std::vector<CheckResult> out;

  run_check(out, "periodicity/full_range_bounds", [&](Check& c) {
    const std::uint64_t k_max = std::max<std::uint64_t>(cap(limit, 200), 2);
    for (std::uint64_t k = 2; k <= k_max; ++k) {
      const PeriodReport report = analyze(k, 0);
      c.expect(report.period_divides_carmichael,
               "period does not divide lambda at K=" + std::to_string(k));
      c.expect(report.onset_within_bound,
               "onset exceeds R at K=" + std::to_string(k));
    }
  });

  run_check(out, "periodicity/odd_exactness", [&](Check& c) {
    const std::uint64_t k_max = std::max<std::uint64_t>(cap(limit, 199), 3);
    for (std::uint64_t k = 3; k <= k_max; k += 2)
      c.equal(analyze(k, 0).period, static_cast<std::size_t>(carmichael(k)),
              "period at odd K=" + std::to_string(k));
  });

  run_check(out, "periodicity/rigged_bounds", [&](Check& c) {
    const std::uint64_t k_max = std::max<std::uint64_t>(cap(limit, 60), 2);
    for (std::uint64_t k = 2; k <= k_max; ++k)
      for (unsigned r = 1; r <= 5; ++r) {
        const PeriodReport report = analyze(k, r);
        c.expect(report.period_divides_carmichael,
                 pair_context("period does not divide lambda at", k, r));
        c.expect(report.onset <= r - 1 + report.max_exponent,
                 pair_context("onset exceeds r-1+R at", k, r));
      }
  });

  run_check(out, "periodicity/residue_consistency", [&](Check& c) {
    const std::size_t count = std::max<std::size_t>(cap(limit, 200), 1);
    const std::uint64_t k_max = std::max<std::uint64_t>(cap(limit, 30), 2);
    const BigSequence f = fubini(count);
    for (std::uint64_t k = 2; k <= k_max; ++k) {
      const std::vector<std::uint64_t> residues = fubini_mod_sequence(k, count);
      for (std::size_t n = 0; n < count; ++n)
        c.equal(residues[n], mpz_fdiv_ui(f.at(n).get_mpz_t(), k),
                pair_context("F mod", k, n));
    }
  });

  run_check(out, "periodicity/trivial_modulus", [&](Check& c) {
    const std::vector<std::uint64_t> residues = fubini_mod_sequence(1, 40);
    for (std::size_t n = 0; n < residues.size(); ++n)
      c.equal(residues[n], std::uint64_t{0}, "F mod 1 at n=" + std::to_string(n));
    const PeriodScan scan = detect_eventual_period(residues, 4, 0);
    c.equal(scan.onset, std::size_t{0}, "onset of the zero sequence");
    c.equal(scan.period, std::size_t{1}, "period of the zero sequence");
  });

  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

std::vector<CheckResult> run_lemma(std::optional<std::size_t> limit) {
  std::vector<CheckResult> out;
  run_check(out, "lemma/counting_recurrence", [&](Check& c) {
    const std::size_t n_max = cap(limit, 7);
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t m = 0; m <= n; ++m)
        c.expect(verify_counting_lemma(static_cast<int>(n), static_cast<int>(m)),
                 pair_context("lemma fails at", n, m));
  });
  return out;
}

}  // namespace

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::oracle: return "oracle";
    case Suite::matrix: return "matrix";
    case Suite::periodicity: return "periodicity";
    case Suite::lemma: return "lemma";
    case Suite::all: return "all";
  }
  throw std::logic_error("suite_name: unknown suite");
}

Suite parse_suite(const std::string& name) {
  if (name == "oracle") return Suite::oracle;
  if (name == "matrix") return Suite::matrix;
  if (name == "periodicity") return Suite::periodicity;
  if (name == "lemma") return Suite::lemma;
  if (name == "all") return Suite::all;
  throw std::domain_error("unknown verification suite: " + name);
}

std::vector<CheckResult> run_suite(Suite suite, std::optional<std::size_t> limit) {
  switch (suite) {
    case Suite::oracle: return run_oracle(limit);
    case Suite::matrix: return run_matrix(limit);
    case Suite::periodicity: return run_periodicity(limit);
    case Suite::lemma: return run_lemma(limit);
    case Suite::all: break;
  }

  auto oracle_part = std::async(std::launch::async, run_oracle, limit);
  auto matrix_part = std::async(std::launch::async, run_matrix, limit);
  auto periodicity_part = std::async(std::launch::async, run_periodicity, limit);
  auto lemma_part = std::async(std::launch::async, run_lemma, limit);

  std::vector<CheckResult> merged;
  for (auto* part : {&oracle_part, &matrix_part, &periodicity_part, &lemma_part})
    for (CheckResult& result : part->get()) merged.push_back(std::move(result));
  std::sort(merged.begin(), merged.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return merged;
}

}  // namespace ordbell
