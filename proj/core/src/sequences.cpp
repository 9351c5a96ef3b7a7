#include "ordbell/sequences.hpp"

#include <stdexcept>
#include <utility>

#include "ordbell/stirling.hpp"

namespace ordbell {

namespace {

bool is_rigged(SequenceKind kind) {
  return kind == SequenceKind::fubini_r || kind == SequenceKind::horse_r;
}

BigInt factorial_of(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt divide_exact(const BigInt& numerator, const BigInt& divisor, const char* what) {
  BigInt quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              divisor.get_mpz_t());
  if (remainder != 0) throw std::logic_error(what);
  return quotient;
}

// Theorem-2 style weighted sum: sum_{j=0..r} s(r,r-j) F(n-j), with the
// coefficients passed as the falling-factorial expansion of order r.
BigInt rigged_sum(const std::vector<BigInt>& coeffs, const BigSequence& f,
                  std::size_t n, unsigned r) {
  BigInt sum(0);
  for (unsigned j = 0; j <= r; ++j) sum += coeffs[r - j] * f.at(n - j);
  return sum;
}

}  // namespace

BigSequence::BigSequence(SequenceKind kind, unsigned r)
    : kind_(kind), r_(is_rigged(kind) ? r : 0) {}

std::size_t BigSequence::start() const { return is_rigged(kind_) ? r_ : 0; }

const BigInt& BigSequence::at(std::size_t n) const {
  if (n < start())
    throw std::domain_error("BigSequence: index below the first defined entry");
  if (n >= end()) throw std::out_of_range("BigSequence: index beyond computed prefix");
  return values_[n - start()];
}

void BigSequence::extend_to(std::size_t n_end) {
  if (n_end <= end()) return;
  switch (kind_) {
    case SequenceKind::factorial:
      while (end() < n_end) {
        const std::size_t idx = end();
        values_.push_back(idx == 0 ? BigInt(1)
                                   : values_.back() * static_cast<unsigned long>(idx));
      }
      return;
    case SequenceKind::fubini:
      // F(n) = sum_{k=0..n} S(n,k) k!, row by row
      while (end() < n_end) {
        const std::size_t n = end();
        BigInt sum(0);
        for (std::size_t k = 0; k <= n; ++k)
          sum += stirling_second(n, k) * factorial_of(k);
        values_.push_back(std::move(sum));
      }
      return;
    case SequenceKind::fubini_r:
    case SequenceKind::horse_r: {
      BigSequence f(SequenceKind::fubini);
      f.extend_to(n_end);
      const std::vector<BigInt> coeffs = falling_factorial_coefficients(r_);
      const BigInt r_factorial = factorial_of(r_);
      while (end() < n_end) {
        BigInt value = rigged_sum(coeffs, f, end(), r_);
        if (kind_ == SequenceKind::horse_r)
          value = divide_exact(value, r_factorial,
                               "horse_r: rigged count not divisible by r!");
        values_.push_back(std::move(value));
      }
      return;
    }
  }
  throw std::logic_error("BigSequence: unknown kind");
}

BigSequence factorials(std::size_t count) {
  if (count == 0) throw std::domain_error("factorials: count must be positive");
  BigSequence s(SequenceKind::factorial);
  s.extend_to(count);
  return s;
}

BigSequence fubini(std::size_t count) {
  if (count == 0) throw std::domain_error("fubini: count must be positive");
  BigSequence s(SequenceKind::fubini);
  s.extend_to(count);
  return s;
}

BigSequence fubini_alternating(std::size_t count) {
  if (count == 0) throw std::domain_error("fubini_alternating: count must be positive");
  BigSequence s(SequenceKind::fubini);
  s.values_.push_back(BigInt(1));
  for (std::size_t n = 1; n < count; ++n) {
    const std::vector<BigInt> row = falling_factorial_coefficients(n);
    BigInt value = factorial_of(n);
    for (std::size_t j = 1; j <= n; ++j) value -= row[n - j] * s.values_[n - j];
    s.values_.push_back(std::move(value));
  }
  return s;
}

BigInt fubini_r(std::size_t n, unsigned r) {
  if (n < r)
    throw std::domain_error("fubini_r: not meaningful for n < r");
  BigSequence f = fubini(n + 1);
  return rigged_sum(falling_factorial_coefficients(r), f, n, r);
}

BigInt horse_r(std::size_t n, unsigned r) {
  return divide_exact(fubini_r(n, r), factorial_of(r),
                      "horse_r: rigged count not divisible by r!");
}

BigSequence fubini_r_sequence(unsigned r, std::size_t count) {
  if (count <= r)
    throw std::domain_error("fubini_r_sequence: count must exceed r");
  BigSequence s(SequenceKind::fubini_r, r);
  s.extend_to(count);
  return s;
}

BigSequence horse_r_sequence(unsigned r, std::size_t count) {
  if (count <= r)
    throw std::domain_error("horse_r_sequence: count must exceed r");
  BigSequence s(SequenceKind::horse_r, r);
  s.extend_to(count);
  return s;
}

BigSequence transform_strong_to_weak(const BigSequence& factorial_seq,
                                     std::size_t count) {
  if (factorial_seq.kind() != SequenceKind::factorial)
    throw std::domain_error("transform_strong_to_weak: input must be factorials");
  if (count == 0) throw std::domain_error("transform_strong_to_weak: empty transform");
  if (factorial_seq.end() < count)
    throw std::invalid_argument("transform_strong_to_weak: size mismatch");
  const TriangularMatrix s_hat = stirling_matrix(StirlingKind::second, count);
  BigSequence out(SequenceKind::fubini);
  for (std::size_t n = 0; n < count; ++n) {
    BigInt sum(0);
    for (std::size_t k = 0; k <= n; ++k) sum += s_hat.at(n, k) * factorial_seq.at(k);
    out.values_.push_back(std::move(sum));
  }
  return out;
}

BigSequence transform_weak_to_strong(const BigSequence& fubini_seq, std::size_t count) {
  if (fubini_seq.kind() != SequenceKind::fubini)
    throw std::domain_error("transform_weak_to_strong: input must be Fubini values");
  if (count == 0) throw std::domain_error("transform_weak_to_strong: empty transform");
  if (fubini_seq.end() < count)
    throw std::invalid_argument("transform_weak_to_strong: size mismatch");
  const TriangularMatrix s_hat = stirling_matrix(StirlingKind::first_signed, count);
  BigSequence out(SequenceKind::factorial);
  for (std::size_t n = 0; n < count; ++n) {
    BigInt sum(0);
    for (std::size_t k = 0; k <= n; ++k) sum += s_hat.at(n, k) * fubini_seq.at(k);
    out.values_.push_back(std::move(sum));
  }
  return out;
}

}  // namespace ordbell
