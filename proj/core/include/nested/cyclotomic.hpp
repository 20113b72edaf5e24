#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace nested {

/// Coefficients of the e-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t e);

/// Sparse sum of e-th roots of unity: (k, m) means m copies of zeta_e^k.
/// Terms are sorted by k, with m > 0.
using RootSum = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Z[zeta_e] with canonical coefficients over the power basis 1, zeta, ...,
/// zeta^{phi(e)-1}. Equality and zero tests are exact.
class CyclotomicRing {
 public:
  explicit CyclotomicRing(std::uint32_t e);

  std::uint32_t order() const noexcept { return e_; }
  std::size_t degree() const noexcept { return phi_.size() - 1; }
  const std::vector<std::int64_t>& modulus() const noexcept { return phi_; }

  /// Reduces a polynomial in zeta (any length; index = power of zeta).
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> poly) const;
  std::vector<std::int64_t> reduce(const RootSum& value) const;
  bool is_zero(const RootSum& value) const;

  /// acc += weight * a * b, in Z[x]/(x^e - 1) (length-e accumulator).
  void multiply_accumulate(std::vector<std::int64_t>& acc, const RootSum& a, const RootSum& b,
                           std::int64_t weight) const;

 private:
  std::uint32_t e_;
  std::vector<std::int64_t> phi_;
  std::vector<std::pair<std::size_t, std::int64_t>> phi_sparse_;
};

/// The Galois-conjugate value chi(g^-1): zeta^k -> zeta^{-k}.
RootSum conjugate(const RootSum& value, std::uint32_t e);

}  // namespace nested
