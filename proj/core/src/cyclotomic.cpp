#include "nested/cyclotomic.hpp"

#include <algorithm>

#include "nested/error.hpp"

namespace nested {

namespace {

// Exact division of a by monic b; throws if the remainder is nonzero.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    if (!c) continue;
    q[i - db] = c;
    for (std::size_t t = 0; t <= db; ++t) a[i - db + t] -= c * b[t];
  }
  if (std::any_of(a.begin(), a.end(), [](std::int64_t v) { return v != 0; }))
    throw InternalError("cyclotomic division left a remainder");
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t e) {
  if (e == 0) throw InputError("cyclotomic order must be positive");
  // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d
  std::vector<std::int64_t> poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (std::uint32_t d = 1; d < e; ++d)
    if (e % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

CyclotomicRing::CyclotomicRing(std::uint32_t e) : e_(e), phi_(cyclotomic_polynomial(e)) {
  for (std::size_t t = 0; t + 1 < phi_.size(); ++t)
    if (phi_[t]) phi_sparse_.emplace_back(t, phi_[t]);
}

std::vector<std::int64_t> CyclotomicRing::reduce(std::vector<std::int64_t> poly) const {
  const std::size_t phi = degree();
  // Fold by x^e = 1 first so the division below is bounded by e - phi steps.
  if (poly.size() > e_) {
    for (std::size_t i = e_; i < poly.size(); ++i) poly[i % e_] += poly[i];
    poly.resize(e_);
  }
  for (std::size_t i = poly.size(); i-- > phi;) {
    const std::int64_t c = poly[i];
    if (!c) continue;
    for (auto [t, coeff] : phi_sparse_) poly[i - phi + t] -= c * coeff;
    poly[i] = 0;
  }
  poly.resize(phi, 0);
  return poly;
}

std::vector<std::int64_t> CyclotomicRing::reduce(const RootSum& value) const {
  std::vector<std::int64_t> poly(e_, 0);
  for (auto [k, m] : value) poly[k % e_] += m;
  return reduce(std::move(poly));
}

bool CyclotomicRing::is_zero(const RootSum& value) const {
  auto r = reduce(value);
  return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
}

void CyclotomicRing::multiply_accumulate(std::vector<std::int64_t>& acc, const RootSum& a,
                                         const RootSum& b, std::int64_t weight) const {
  for (auto [ka, ma] : a)
    for (auto [kb, mb] : b) acc[(ka + kb) % e_] += weight * ma * mb;
}

RootSum conjugate(const RootSum& value, std::uint32_t e) {
  RootSum out;
  out.reserve(value.size());
  for (auto [k, m] : value) out.emplace_back((e - k) % e, m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nested
