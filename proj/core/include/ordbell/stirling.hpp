#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordbell/bigint.hpp"

namespace ordbell {

enum class StirlingKind {
  first_signed,  // s(n,k): signed cycle counts
  second,        // S(n,k): block counts
};

// Dense N x N lower-triangular integer matrix. Houses truncations of the
// Stirling triangles and their products; entries above the diagonal are zero
// and the diagonal is all ones.
class TriangularMatrix {
 public:
  explicit TriangularMatrix(std::size_t size,
                            std::optional<StirlingKind> kind = std::nullopt);

  std::size_t size() const { return size_; }
  std::optional<StirlingKind> kind() const { return kind_; }

  const BigInt& at(std::size_t row, std::size_t col) const;
  BigInt& at(std::size_t row, std::size_t col);

  friend bool operator==(const TriangularMatrix& a, const TriangularMatrix& b) {
    return a.size_ == b.size_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t size_;
  std::optional<StirlingKind> kind_;
  std::vector<BigInt> cells_;  // row-major
};

// Coefficients of x(x-1)...(x-r+1) by symbolic expansion; entry k is s(r,k).
std::vector<BigInt> falling_factorial_coefficients(std::size_t r);

/// Signed Stirling number of the first kind; 0 when k > n.
BigInt stirling_first_signed(std::size_t n, std::size_t k);

// Stirling number of the second kind via the explicit alternating sum
//   S(n,k) = (1/k!) * sum_{t=0..k} (-1)^(k-t) C(k,t) t^n,
// with the division by k! checked exact. 0 when k > n.
BigInt stirling_second(std::size_t n, std::size_t k);

TriangularMatrix stirling_matrix(StirlingKind kind, std::size_t size);
TriangularMatrix identity_matrix(std::size_t size);

/// Exact product of two equal-size triangular matrices.
TriangularMatrix matrix_product(const TriangularMatrix& a, const TriangularMatrix& b);

}  // namespace ordbell
