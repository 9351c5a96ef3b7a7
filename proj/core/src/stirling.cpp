#include "ordbell/stirling.hpp"

#include <stdexcept>
#include <utility>

namespace ordbell {

TriangularMatrix::TriangularMatrix(std::size_t size, std::optional<StirlingKind> kind)
    : size_(size), kind_(kind), cells_(size * size, BigInt(0)) {
  if (size == 0) throw std::domain_error("TriangularMatrix: size must be positive");
}

const BigInt& TriangularMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= size_ || col >= size_)
    throw std::out_of_range("TriangularMatrix: index outside matrix");
  return cells_[row * size_ + col];
}

BigInt& TriangularMatrix::at(std::size_t row, std::size_t col) {
  if (row >= size_ || col >= size_)
    throw std::out_of_range("TriangularMatrix: index outside matrix");
  return cells_[row * size_ + col];
}

std::vector<BigInt> falling_factorial_coefficients(std::size_t r) {
  std::vector<BigInt> coeffs{BigInt(1)};
  for (std::size_t i = 0; i < r; ++i) {
    // multiply the polynomial by (x - i)
    std::vector<BigInt> next(coeffs.size() + 1, BigInt(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= BigInt(static_cast<unsigned long>(i)) * coeffs[k];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

BigInt stirling_first_signed(std::size_t n, std::size_t k) {
  if (k > n) return BigInt(0);
  return falling_factorial_coefficients(n)[k];
}

BigInt stirling_second(std::size_t n, std::size_t k) {
  if (k > n) return BigInt(0);
  BigInt sum(0);
  for (std::size_t t = 0; t <= k; ++t) {
    BigInt term, power;
    mpz_bin_uiui(term.get_mpz_t(), k, t);
    mpz_ui_pow_ui(power.get_mpz_t(), t, n);
    term *= power;
    if ((k - t) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  BigInt k_factorial, quotient, remainder;
  mpz_fac_ui(k_factorial.get_mpz_t(), k);
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), sum.get_mpz_t(),
              k_factorial.get_mpz_t());
  if (remainder != 0)
    throw std::logic_error("stirling_second: alternating sum not divisible by k!");
  return quotient;
}

TriangularMatrix stirling_matrix(StirlingKind kind, std::size_t size) {
  TriangularMatrix m(size, kind);
  if (kind == StirlingKind::first_signed) {
    for (std::size_t n = 0; n < size; ++n) {
      // one expansion per row: entry k of x(x-1)...(x-n+1) is s(n,k)
      std::vector<BigInt> row = falling_factorial_coefficients(n);
      for (std::size_t k = 0; k <= n; ++k) m.at(n, k) = row[k];
    }
  } else {
    for (std::size_t n = 0; n < size; ++n)
      for (std::size_t k = 0; k <= n; ++k) m.at(n, k) = stirling_second(n, k);
  }
  return m;
}

TriangularMatrix identity_matrix(std::size_t size) {
  TriangularMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

TriangularMatrix matrix_product(const TriangularMatrix& a, const TriangularMatrix& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("matrix_product: size mismatch");
  const std::size_t n = a.size();
  TriangularMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      BigInt sum(0);
      for (std::size_t k = j; k <= i; ++k) sum += a.at(i, k) * b.at(k, j);
      c.at(i, j) = std::move(sum);
    }
  return c;
}

}  // namespace ordbell
