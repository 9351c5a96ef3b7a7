#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ordbell/stirling.hpp"

using namespace ordbell;

TEST_CASE("falling factorial expansion") {
  CHECK(falling_factorial_coefficients(0) == std::vector<BigInt>{BigInt(1)});
  CHECK(falling_factorial_coefficients(2) ==
        std::vector<BigInt>{BigInt(0), BigInt(-1), BigInt(1)});
  CHECK(falling_factorial_coefficients(3) ==
        std::vector<BigInt>{BigInt(0), BigInt(2), BigInt(-3), BigInt(1)});
}

TEST_CASE("first kind scalar values") {
  CHECK(stirling_first_signed(0, 0) == 1);
  CHECK(stirling_first_signed(3, 3) == 1);
  CHECK(stirling_first_signed(3, 2) == -3);
  CHECK(stirling_first_signed(3, 1) == 2);
  CHECK(stirling_first_signed(2, 1) == -1);
  CHECK(stirling_first_signed(4, 1) == -6);
  CHECK(stirling_first_signed(4, 0) == 0);
  CHECK(stirling_first_signed(2, 5) == 0);
}

TEST_CASE("second kind scalar values") {
  CHECK(stirling_second(0, 0) == 1);
  CHECK(stirling_second(3, 2) == 3);
  CHECK(stirling_second(5, 1) == 1);
  CHECK(stirling_second(4, 4) == 1);
  CHECK(stirling_second(5, 2) == 15);
  CHECK(stirling_second(4, 0) == 0);
  CHECK(stirling_second(2, 5) == 0);
}

TEST_CASE("first kind recurrence cross-check") {
  // s(n+1,k) = s(n,k-1) - n s(n,k)
  for (std::size_t n = 0; n < 25; ++n)
    for (std::size_t k = 0; k <= n + 1; ++k) {
      const BigInt lower = k == 0 ? BigInt(0) : stirling_first_signed(n, k - 1);
      CHECK(stirling_first_signed(n + 1, k) ==
            lower - BigInt(static_cast<unsigned long>(n)) * stirling_first_signed(n, k));
    }
}

TEST_CASE("second kind recurrence cross-check") {
  // S(n+1,k) = S(n,k-1) + k S(n,k)
  for (std::size_t n = 0; n < 25; ++n)
    for (std::size_t k = 0; k <= n + 1; ++k) {
      const BigInt lower = k == 0 ? BigInt(0) : stirling_second(n, k - 1);
      CHECK(stirling_second(n + 1, k) ==
            lower + BigInt(static_cast<unsigned long>(k)) * stirling_second(n, k));
    }
}

TEST_CASE("sign structure of the first kind") {
  for (std::size_t n = 0; n <= 15; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const BigInt value = stirling_first_signed(n, k);
      if (value == 0) continue;
      CHECK(sgn(value) == (((n - k) % 2 == 0) ? 1 : -1));
    }
}

TEST_CASE("matrix construction") {
  const TriangularMatrix tiny = stirling_matrix(StirlingKind::first_signed, 1);
  CHECK(tiny.size() == 1);
  CHECK(tiny.at(0, 0) == 1);
  CHECK(tiny.kind() == StirlingKind::first_signed);

  const TriangularMatrix second = stirling_matrix(StirlingKind::second, 3);
  CHECK(second.at(0, 0) == 1);
  CHECK(second.at(1, 0) == 0);
  CHECK(second.at(1, 1) == 1);
  CHECK(second.at(2, 0) == 0);
  CHECK(second.at(2, 1) == 1);
  CHECK(second.at(2, 2) == 1);

  const TriangularMatrix first = stirling_matrix(StirlingKind::first_signed, 3);
  CHECK(first.at(2, 1) == -1);
  CHECK(first.at(2, 2) == 1);
  CHECK(first.at(2, 0) == 0);
}

TEST_CASE("matrix invariants: unit diagonal, zero above") {
  for (StirlingKind kind : {StirlingKind::first_signed, StirlingKind::second}) {
    const TriangularMatrix m = stirling_matrix(kind, 12);
    for (std::size_t n = 0; n < 12; ++n) {
      CHECK(m.at(n, n) == 1);
      for (std::size_t k = n + 1; k < 12; ++k) CHECK(m.at(n, k) == 0);
    }
  }
}

TEST_CASE("inverse pair at N=10") {
  const TriangularMatrix first = stirling_matrix(StirlingKind::first_signed, 10);
  const TriangularMatrix second = stirling_matrix(StirlingKind::second, 10);
  const TriangularMatrix id = identity_matrix(10);
  CHECK(matrix_product(first, second) == id);
  CHECK(matrix_product(second, first) == id);
}

TEST_CASE("matrix errors") {
  CHECK_THROWS_AS(matrix_product(identity_matrix(3), identity_matrix(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(identity_matrix(2).at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(TriangularMatrix(0), std::domain_error);
}
