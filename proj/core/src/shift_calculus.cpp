#include "ordbell/shift_calculus.hpp"

#include <stdexcept>

namespace ordbell {

ShiftPolynomial ShiftPolynomial::identity() { return term(0, BigInt(1)); }

ShiftPolynomial ShiftPolynomial::term(int offset, BigInt coefficient) {
  ShiftPolynomial p;
  if (coefficient != 0) p.terms_.emplace(offset, std::move(coefficient));
  return p;
}

BigInt ShiftPolynomial::coefficient(int offset) const {
  auto it = terms_.find(offset);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void ShiftPolynomial::add_term(int offset, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(offset, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

ShiftPolynomial compose(const ShiftPolynomial& p, const ShiftPolynomial& q) {
  ShiftPolynomial product;
  for (const auto& [po, pc] : p.terms_)
    for (const auto& [qo, qc] : q.terms_) product.add_term(po + qo, pc * qc);
  return product;
}

ShiftPolynomial operator+(const ShiftPolynomial& p, const ShiftPolynomial& q) {
  ShiftPolynomial sum = p;
  for (const auto& [offset, coeff] : q.terms_) sum.add_term(offset, coeff);
  return sum;
}

ShiftPolynomial falling_factorial_operator(unsigned r) {
  // E (E - 1I) ... (E - (r-1)I), then normalized by E^(-r)
  ShiftPolynomial acc = ShiftPolynomial::identity();
  for (unsigned i = 0; i < r; ++i) {
    const ShiftPolynomial factor =
        ShiftPolynomial::term(1, BigInt(1)) +
        ShiftPolynomial::term(0, -BigInt(static_cast<unsigned long>(i)));
    acc = compose(acc, factor);
  }
  return compose(acc, ShiftPolynomial::term(-static_cast<int>(r), BigInt(1)));
}

BigInt apply(const ShiftPolynomial& p, const BigSequence& seq, std::size_t n) {
  BigInt sum(0);
  for (const auto& [offset, coeff] : p.terms()) {
    const long long idx = static_cast<long long>(n) + offset;
    if (idx < static_cast<long long>(seq.start()))
      throw std::domain_error("apply: shift lands below the sequence domain");
    sum += coeff * seq.at(static_cast<std::size_t>(idx));
  }
  return sum;
}

}  // namespace ordbell
