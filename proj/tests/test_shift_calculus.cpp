#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ordbell/sequences.hpp"
#include "ordbell/shift_calculus.hpp"
#include "ordbell/stirling.hpp"

using namespace ordbell;

namespace {

ShiftPolynomial random_operator(std::mt19937& rng) {
  std::uniform_int_distribution<int> offset_dist(-3, 3);
  std::uniform_int_distribution<int> coeff_dist(-5, 5);
  std::uniform_int_distribution<int> term_count(0, 4);
  ShiftPolynomial p;
  const int terms = term_count(rng);
  for (int i = 0; i < terms; ++i)
    p = p + ShiftPolynomial::term(offset_dist(rng), BigInt(coeff_dist(rng)));
  return p;
}

}  // namespace

TEST_CASE("construction and accessors") {
  const ShiftPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.coefficient(0) == 0);

  CHECK(ShiftPolynomial::term(2, BigInt(0)).is_zero());

  const ShiftPolynomial identity = ShiftPolynomial::identity();
  CHECK(identity.coefficient(0) == 1);
  CHECK(identity.terms().size() == 1);

  const ShiftPolynomial shift = ShiftPolynomial::term(1, BigInt(1));
  CHECK(shift.coefficient(1) == 1);
  CHECK(shift.coefficient(0) == 0);
}

TEST_CASE("addition cancels term by term") {
  const ShiftPolynomial p = ShiftPolynomial::term(1, BigInt(3));
  const ShiftPolynomial q = ShiftPolynomial::term(1, BigInt(-3));
  CHECK((p + q).is_zero());
  CHECK((p + ShiftPolynomial()) == p);
}

TEST_CASE("composition matches hand expansions") {
  const ShiftPolynomial e = ShiftPolynomial::term(1, BigInt(1));
  const ShiftPolynomial e_minus_1 = e + ShiftPolynomial::term(0, BigInt(-1));
  const ShiftPolynomial e_minus_2 = e + ShiftPolynomial::term(0, BigInt(-2));

  // (E - I) E = E^2 - E
  const ShiftPolynomial square = compose(e_minus_1, e);
  CHECK(square.coefficient(2) == 1);
  CHECK(square.coefficient(1) == -1);
  CHECK(square.terms().size() == 2);

  // (E - I)(E - 2I) = E^2 - 3E + 2I
  const ShiftPolynomial product = compose(e_minus_1, e_minus_2);
  CHECK(product.coefficient(2) == 1);
  CHECK(product.coefficient(1) == -3);
  CHECK(product.coefficient(0) == 2);

  // identity law
  CHECK(compose(ShiftPolynomial::identity(), product) == product);
  CHECK(compose(product, ShiftPolynomial::identity()) == product);
}

TEST_CASE("falling factorial operator") {
  CHECK(falling_factorial_operator(0) == ShiftPolynomial::identity());

  const ShiftPolynomial two = falling_factorial_operator(2);
  CHECK(two.coefficient(0) == 1);
  CHECK(two.coefficient(-1) == -1);
  CHECK(two.terms().size() == 2);

  const ShiftPolynomial three = falling_factorial_operator(3);
  CHECK(three.coefficient(0) == 1);
  CHECK(three.coefficient(-1) == -3);
  CHECK(three.coefficient(-2) == 2);
}

TEST_CASE("operator coefficients are first-kind Stirling numbers") {
  for (unsigned r = 0; r <= 20; ++r) {
    const ShiftPolynomial op = falling_factorial_operator(r);
    for (unsigned j = 0; j <= r; ++j)
      CHECK(op.coefficient(static_cast<int>(j) - static_cast<int>(r)) ==
            stirling_first_signed(r, j));
  }
}

TEST_CASE("apply on sequences") {
  const BigSequence f = fubini(10);
  const BigSequence facts = factorials(6);

  CHECK(apply(ShiftPolynomial::identity(), f, 5) == f.at(5));
  CHECK(apply(ShiftPolynomial::term(1, BigInt(1)), facts, 3) == 24);
  CHECK(apply(falling_factorial_operator(2), f, 3) == 10);  // F(3) - F(2)

  // zero coefficients are dropped, so offsets of (E)_2 E^(-2) stop at -1
  CHECK(apply(falling_factorial_operator(2), f, 1) == 0);
  // below the first defined index
  CHECK_THROWS_AS(apply(falling_factorial_operator(2), f, 0), std::domain_error);
  const BigSequence rigged = fubini_r_sequence(3, 8);
  CHECK_THROWS_AS(apply(ShiftPolynomial::term(-1, BigInt(1)), rigged, 3),
                  std::domain_error);
  // beyond the computed prefix
  CHECK_THROWS_AS(apply(ShiftPolynomial::term(1, BigInt(1)), f, 9), std::out_of_range);
}

TEST_CASE("ring laws on random operators") {
  std::mt19937 rng(20240817);
  const ShiftPolynomial identity = ShiftPolynomial::identity();
  for (int trial = 0; trial < 1000; ++trial) {
    const ShiftPolynomial p = random_operator(rng);
    const ShiftPolynomial q = random_operator(rng);
    const ShiftPolynomial r = random_operator(rng);

    CHECK(compose(p, q) == compose(q, p));
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, q + r) == compose(p, q) + compose(p, r));
    CHECK(compose(p, identity) == p);
    CHECK(compose(p, ShiftPolynomial()).is_zero());
    CHECK((p + q) == (q + p));
  }
}

TEST_CASE("apply is linear") {
  std::mt19937 rng(7);
  const BigSequence f = fubini(12);
  std::uniform_int_distribution<int> offset_dist(-2, 2);
  std::uniform_int_distribution<int> coeff_dist(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    ShiftPolynomial p, q;
    for (int i = 0; i < 3; ++i) {
      p = p + ShiftPolynomial::term(offset_dist(rng), BigInt(coeff_dist(rng)));
      q = q + ShiftPolynomial::term(offset_dist(rng), BigInt(coeff_dist(rng)));
    }
    const std::size_t n = 5;
    CHECK(apply(p + q, f, n) == apply(p, f, n) + apply(q, f, n));
  }
}
