#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "ordbell/number_theory.hpp"
#include "ordbell/periodicity.hpp"
#include "ordbell/sequences.hpp"

using namespace ordbell;

TEST_CASE("residue sequence basics") {
  CHECK(fubini_mod_sequence(1, 5) == std::vector<std::uint64_t>{0, 0, 0, 0, 0});
  CHECK(fubini_mod_sequence(2, 6) == std::vector<std::uint64_t>{1, 1, 1, 1, 1, 1});
  CHECK(fubini_mod_sequence(3, 6) == std::vector<std::uint64_t>{1, 1, 0, 1, 0, 1});
  CHECK_THROWS_AS(fubini_mod_sequence(0, 5), std::domain_error);
  CHECK_THROWS_AS(fubini_mod_sequence(5, 0), std::domain_error);
}

TEST_CASE("residue sequence matches exact values") {
  const BigSequence f = fubini(120);
  for (std::uint64_t k : {2ull, 3ull, 7ull, 16ull, 30ull, 97ull, 1000003ull}) {
    const std::vector<std::uint64_t> residues = fubini_mod_sequence(k, 120);
    for (std::size_t n = 0; n < 120; ++n)
      CHECK(residues[n] == mpz_fdiv_ui(f.at(n).get_mpz_t(), k));
  }
}

TEST_CASE("rigged residue sequence") {
  CHECK(fubini_r_mod_sequence(17, 0, 10) == fubini_mod_sequence(17, 10));
  CHECK(fubini_r_mod_sequence(7, 3, 4)[0] == 6);   // F_3(3) = 3! = 6
  CHECK(fubini_r_mod_sequence(5, 2, 4)[1] == 0);   // F_2(3) = 10
  CHECK(fubini_r_mod_sequence(1, 2, 10) == std::vector<std::uint64_t>(8, 0));
  CHECK_THROWS_AS(fubini_r_mod_sequence(7, 3, 3), std::domain_error);

  for (std::uint64_t k : {4ull, 9ull, 30ull})
    for (unsigned r = 1; r <= 4; ++r) {
      const std::vector<std::uint64_t> residues = fubini_r_mod_sequence(k, r, 40);
      for (std::size_t n = r; n < 40; ++n)
        CHECK(residues[n - r] == mpz_fdiv_ui(fubini_r(n, r).get_mpz_t(), k));
    }
}

TEST_CASE("period detection on known sequences") {
  const std::vector<std::uint64_t> zeros(30, 0);
  const PeriodScan trivial = detect_eventual_period(zeros, 4, 0);
  CHECK(trivial.onset == 0);
  CHECK(trivial.period == 1);

  const std::vector<std::uint64_t> mod3 = fubini_mod_sequence(3, 25);
  const PeriodScan scan3 = detect_eventual_period(mod3, 2, 1);
  CHECK(scan3.onset == 1);
  CHECK(scan3.period == 2);

  const std::vector<std::uint64_t> mod2 = fubini_mod_sequence(2, 25);
  const PeriodScan scan2 = detect_eventual_period(mod2, 1, 1);
  CHECK(scan2.onset == 0);
  CHECK(scan2.period == 1);
}

TEST_CASE("period detection errors") {
  const std::vector<std::uint64_t> zeros(10, 0);
  CHECK_THROWS_AS(detect_eventual_period(zeros, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(detect_eventual_period(zeros, 0, 0), std::domain_error);

  // a sequence with no eventual period at all falsifies any bound loudly
  std::vector<std::uint64_t> ramp(40);
  std::iota(ramp.begin(), ramp.end(), 0);
  CHECK_THROWS_AS(detect_eventual_period(ramp, 2, 0), TheoremViolation);
}

TEST_CASE("analyze fixed moduli") {
  const PeriodReport three = analyze(3, 0);
  CHECK(three.onset == 1);
  CHECK(three.period == 2);
  CHECK(three.carmichael == 2);
  CHECK(three.max_exponent == 1);
  CHECK(three.period_divides_carmichael);
  CHECK(three.onset_within_bound);

  const PeriodReport two = analyze(2, 0);
  CHECK(two.onset == 0);
  CHECK(two.period == 1);

  const PeriodReport fifteen = analyze(15, 0);
  CHECK(fifteen.period == 4);
  CHECK(fifteen.carmichael == 4);

  CHECK_THROWS_AS(analyze(1, 0), std::domain_error);
  CHECK_THROWS_AS(analyze(0, 0), std::domain_error);
}

TEST_CASE("analyze respects the theorem bounds across a range") {
  for (std::uint64_t k = 2; k <= 80; ++k) {
    const PeriodReport report = analyze(k, 0);
    CHECK(report.period_divides_carmichael);
    CHECK(report.onset_within_bound);
    CHECK(report.onset <= report.max_exponent);
    if (k % 2 == 1) CHECK(report.period == report.carmichael);
  }
}

TEST_CASE("analyze rigged sequences") {
  for (std::uint64_t k : {2ull, 5ull, 12ull, 15ull, 36ull})
    for (unsigned r = 1; r <= 4; ++r) {
      const PeriodReport report = analyze(k, r);
      CHECK(report.r == r);
      CHECK(report.period_divides_carmichael);
      CHECK(report.onset_within_bound);
      CHECK(report.onset <= r - 1 + report.max_exponent);
    }
}
