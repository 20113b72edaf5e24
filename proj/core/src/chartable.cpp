#include "nested/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nested/error.hpp"
#include "nested/pc.hpp"

namespace nested {

// ---- classes --------------------------------------------------------------

std::uint32_t ClassData::power_class(std::int64_t t, std::uint32_t c) const noexcept {
  const std::int64_t o = static_cast<std::int64_t>(power_map[c].size());
  t %= o;
  if (t < 0) t += o;
  return power_map[c][static_cast<std::size_t>(t)];
}

ClassData conjugacy_classes(const GroupTable& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  ClassData cd;
  cd.class_of.assign(n, kUnset);
  auto add_class = [&](Element x) {
    const auto c = static_cast<std::uint32_t>(cd.sizes.size());
    std::vector<Element> orbit{x};
    cd.class_of[x] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Element t : g.generators()) {
        const Element y = g.conj(orbit[i], t);
        if (cd.class_of[y] == kUnset) {
          cd.class_of[y] = c;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    cd.representatives.push_back(x);
    cd.sizes.push_back(orbit.size());
    cd.members.push_back(std::move(orbit));
  };
  add_class(g.identity());
  for (Element x = 0; x < n; ++x)
    if (cd.class_of[x] == kUnset) add_class(x);

  const std::size_t r = cd.sizes.size();
  cd.inverse_class.resize(r);
  cd.power_map.resize(r);
  for (std::size_t c = 0; c < r; ++c) {
    const Element x = cd.representatives[c];
    cd.inverse_class[c] = cd.class_of[g.inv(x)];
    auto& pm = cd.power_map[c];
    pm.resize(g.element_order(x));
    Element y = g.identity();
    for (auto& entry : pm) {
      entry = cd.class_of[y];
      y = g.mul(y, x);
    }
  }
  return cd;
}

// ---- modular arithmetic ---------------------------------------------------

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g)
    if (std::all_of(factors.begin(), factors.end(), [&](u64 q) { return powmod(g, (p - 1) / q, p) != 1; }))
      return g;
  throw InternalError("no primitive root");
}

using Row = std::vector<u64>;

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& rows, u64 p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const u64 s = invmod(rows[r][c], p);
    for (auto& v : rows[r]) v = mulmod(v, s, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[i][k] = (rows[i][k] + p - mulmod(f, rows[r][k], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {u : A u = 0} for square A.
std::vector<Row> nullspace(std::vector<Row> a, u64 p) {
  const std::size_t n = a.size();
  auto piv = rref(a, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Row u(n, 0);
    u[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) u[piv[r]] = (p - a[r][f]) % p;
    basis.push_back(std::move(u));
  }
  return basis;
}

// Characteristic polynomial (constant first) via Hessenberg reduction.
std::vector<u64> charpoly(std::vector<Row> h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const u64 inv = invmod(h[m][m - 1], p);
    for (std::size_t k = m + 1; k < n; ++k) {
      const u64 u = mulmod(h[k][m - 1], inv, p);
      if (!u) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = (h[k][c] + p - mulmod(u, h[m][c], p)) % p;
      for (std::size_t r = 0; r < n; ++r) h[r][m] = (h[r][m] + mulmod(u, h[r][k], p)) % p;
    }
  }
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    auto& next = polys[m + 1];
    next.assign(m + 2, 0);
    for (std::size_t t = 0; t <= m; ++t) {
      next[t + 1] = (next[t + 1] + polys[m][t]) % p;
      next[t] = (next[t] + p - mulmod(h[m][m], polys[m][t], p)) % p;
    }
    u64 prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], p);
      if (!prod) break;
      const u64 f = mulmod(prod, h[i][m], p);
      for (std::size_t t = 0; t < polys[i].size(); ++t)
        next[t] = (next[t] + p - mulmod(f, polys[i][t], p)) % p;
    }
  }
  return polys[n];
}

std::vector<u64> roots(const std::vector<u64>& poly, u64 p) {
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x) {
    u64 v = 0;
    for (std::size_t t = poly.size(); t-- > 0;) v = (mulmod(v, x, p) + poly[t]) % p;
    if (!v) out.push_back(x);
  }
  return out;
}

}  // namespace

std::uint64_t choose_prime(std::uint32_t e, std::size_t n, std::size_t max_class) {
  const double bound = std::max(2.0 * std::sqrt(static_cast<double>(n)), static_cast<double>(max_class));
  for (u64 p = e + 1;; p += e) {
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
    if (p > (u64{1} << 31)) throw InternalError("no suitable prime below 2^31");
  }
}

// ---- table ----------------------------------------------------------------

CharacterTable::CharacterTable(ClassData classes, std::uint32_t exponent, std::uint64_t prime,
                               std::vector<std::uint32_t> degrees,
                               std::vector<std::vector<RootSum>> values)
    : classes_(std::move(classes)),
      exponent_(exponent),
      prime_(prime),
      degrees_(std::move(degrees)),
      values_(std::move(values)),
      ring_(exponent) {}

void CharacterTable::swap_rows(std::size_t a, std::size_t b) {
  std::swap(degrees_[a], degrees_[b]);
  std::swap(values_[a], values_[b]);
}

bool CharacterTable::in_kernel(std::size_t i, std::size_t c) const {
  const auto& v = values_[i][c];
  return v.size() == 1 && v[0].first == 0;
}

bool CharacterTable::in_center(std::size_t i, std::size_t c) const { return values_[i][c].size() == 1; }

bool CharacterTable::value_is_zero(std::size_t i, std::size_t c) const {
  return ring_.is_zero(values_[i][c]);
}

Subgroup CharacterTable::kernel(std::size_t i) const {
  Subgroup s(classes_.class_of.size());
  for (std::size_t c = 0; c < classes_.count(); ++c)
    if (in_kernel(i, c))
      for (Element x : classes_.members[c]) s.insert(x);
  return s;
}

Subgroup CharacterTable::center(std::size_t i) const {
  Subgroup s(classes_.class_of.size());
  for (std::size_t c = 0; c < classes_.count(); ++c)
    if (in_center(i, c))
      for (Element x : classes_.members[c]) s.insert(x);
  return s;
}

std::vector<std::uint32_t> CharacterTable::degree_set() const {
  std::vector<std::uint32_t> d = degrees_;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

namespace {

// Sorts rows by degree, then by value vectors; the trivial character comes first.
CharacterTable assemble(ClassData cd, std::uint32_t e, u64 p, std::vector<std::uint32_t> degrees,
                        std::vector<std::vector<RootSum>> values) {
  std::vector<std::size_t> order(degrees.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    return values[a] < values[b];
  });
  std::vector<std::uint32_t> sorted_degrees;
  std::vector<std::vector<RootSum>> sorted_values;
  for (auto i : order) {
    sorted_degrees.push_back(degrees[i]);
    sorted_values.push_back(std::move(values[i]));
  }
  return CharacterTable(std::move(cd), e, p, std::move(sorted_degrees), std::move(sorted_values));
}

// Abelian groups: every character is linear, so solve lambda(g_i)^{p_i} =
// lambda(g_i^{p_i}) generator by generator along a pc basis. Avoids the
// |G|-way eigenspace split that dominates the generic path for cyclic groups.
CharacterTable abelian_table(const GroupTable& g, ClassData cd, std::uint32_t e, u64 p) {
  std::vector<Element> image;
  const PcPresentation pc = pc_from_group(g, &image);
  const std::size_t k = pc.rank();
  std::vector<std::vector<std::uint32_t>> assignments{std::vector<std::uint32_t>(k, 0)};
  for (std::size_t i = k; i-- > 0;) {
    const std::uint32_t q = pc.primes[i];
    std::vector<std::vector<std::uint32_t>> next;
    next.reserve(assignments.size() * q);
    for (auto& t : assignments) {
      std::uint64_t c = 0;
      for (std::size_t j = i + 1; j < k; ++j) c += std::uint64_t{pc.powers[i][j]} * t[j];
      c %= e;
      if (c % q) throw InternalError("abelian character does not extend");
      for (std::uint32_t u = 0; u < q; ++u) {
        auto ext = t;
        ext[i] = static_cast<std::uint32_t>((c / q + std::uint64_t{u} * (e / q)) % e);
        next.push_back(std::move(ext));
      }
    }
    assignments = std::move(next);
  }
  std::vector<PcWord> words(g.order());
  for (Element x = 0; x < g.order(); ++x) words[x] = pc_index_word(pc, image[x]);
  std::vector<std::vector<RootSum>> values;
  for (const auto& t : assignments) {
    std::vector<RootSum> row(cd.count());
    for (std::size_t c = 0; c < cd.count(); ++c) {
      const auto& w = words[cd.representatives[c]];
      std::uint64_t kk = 0;
      for (std::size_t j = 0; j < k; ++j) kk += std::uint64_t{w[j]} * t[j];
      row[c] = {{static_cast<std::uint32_t>(kk % e), 1u}};
    }
    values.push_back(std::move(row));
  }
  std::vector<std::uint32_t> degrees(values.size(), 1);
  return assemble(std::move(cd), e, p, std::move(degrees), std::move(values));
}

}  // namespace

CharacterTable compute_character_table(const GroupTable& g, std::size_t order_cap) {
  if (g.order() > order_cap) throw CapExceeded("character table", g.order(), order_cap);
  ClassData cd = conjugacy_classes(g);
  const std::size_t r = cd.count();
  const auto e = static_cast<std::uint32_t>(exponent(g));
  const std::size_t max_class = *std::max_element(cd.sizes.begin(), cd.sizes.end());
  const u64 p = choose_prime(e, g.order(), max_class);
  if (cd.count() == g.order()) return abelian_table(g, std::move(cd), e, p);
  const u64 z = powmod(primitive_root(p), (p - 1) / e, p);

  // Class matrices in ascending class-size order (identity class skipped).
  std::vector<std::uint32_t> split_order(r);
  std::iota(split_order.begin(), split_order.end(), 0u);
  std::stable_sort(split_order.begin(), split_order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return cd.sizes[a] < cd.sizes[b]; });
  split_order.erase(std::remove(split_order.begin(), split_order.end(), 0u), split_order.end());

  // Restriction of class matrix j to the subspace spanned by `basis` (RREF,
  // pivots `piv`): R[b][a] = sum_k c_{j, piv_b, k} basis_a[k], where
  // c_{j,i,k} = #{x in C_j : x^-1 g_k in C_i}.
  std::vector<std::int64_t> pivot_pos(r, -1);
  auto restrict_to = [&](std::uint32_t j, const std::vector<Row>& basis,
                         const std::vector<std::size_t>& piv) {
    const std::size_t s = basis.size();
    for (std::size_t b = 0; b < s; ++b) pivot_pos[piv[b]] = static_cast<std::int64_t>(b);
    std::vector<Row> rmat(s, Row(s, 0));
    for (std::size_t k = 0; k < r; ++k) {
      const Element gk = cd.representatives[k];
      for (Element x : cd.members[j]) {
        const auto b = pivot_pos[cd.class_of[g.mul(g.inv(x), gk)]];
        if (b < 0) continue;
        auto& row = rmat[static_cast<std::size_t>(b)];
        for (std::size_t a = 0; a < s; ++a) row[a] = (row[a] + basis[a][k]) % p;
      }
    }
    for (std::size_t b = 0; b < s; ++b) pivot_pos[piv[b]] = -1;
    return rmat;
  };

  std::vector<Row> eigvecs;
  struct Pending {
    std::vector<Row> basis;
    std::size_t next_matrix;
  };
  std::vector<Pending> work;
  {
    std::vector<Row> id(r, Row(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    work.push_back({std::move(id), 0});
  }
  while (!work.empty()) {
    Pending cur = std::move(work.back());
    work.pop_back();
    if (cur.basis.size() == 1) {
      eigvecs.push_back(std::move(cur.basis[0]));
      continue;
    }
    auto piv = rref(cur.basis, p);
    bool split = false;
    for (std::size_t t = cur.next_matrix; t < split_order.size() && !split; ++t) {
      auto rmat = restrict_to(split_order[t], cur.basis, piv);
      const std::size_t s = rmat.size();
      auto lambdas = roots(charpoly(rmat, p), p);
      if (lambdas.size() <= 1) continue;
      std::size_t total = 0;
      for (u64 lambda : lambdas) {
        auto shifted = rmat;
        for (std::size_t i = 0; i < s; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
        std::vector<Row> sub;
        for (const auto& u : nullspace(std::move(shifted), p)) {
          Row v(r, 0);
          for (std::size_t a = 0; a < s; ++a)
            if (u[a])
              for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + mulmod(u[a], cur.basis[a][k], p)) % p;
          sub.push_back(std::move(v));
        }
        total += sub.size();
        work.push_back({std::move(sub), t + 1});
      }
      if (total != s) throw InternalError("class matrix restriction is not diagonalizable mod p");
      split = true;
    }
    if (!split)
      throw InternalError("eigenspace of dimension " + std::to_string(cur.basis.size()) +
                          " did not split");
  }
  if (eigvecs.size() != r) throw InternalError("found " + std::to_string(eigvecs.size()) +
                                               " characters for " + std::to_string(r) + " classes");

  const u64 n_mod = g.order() % p;
  const auto sqrt_n = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(g.order())) + 1e-9);
  std::vector<std::uint32_t> degrees;
  std::vector<std::vector<RootSum>> values;
  for (auto& v : eigvecs) {
    if (v[0] == 0) throw InternalError("eigenvector vanishes at the identity class");
    const u64 s0 = invmod(v[0], p);
    for (auto& x : v) x = mulmod(x, s0, p);
    u64 norm = 0;
    for (std::size_t k = 0; k < r; ++k)
      norm = (norm + mulmod(mulmod(v[k], v[cd.inverse_class[k]], p), invmod(cd.sizes[k] % p, p), p)) % p;
    const u64 d2 = mulmod(n_mod, invmod(norm, p), p);
    std::uint32_t d = 0;
    for (std::uint32_t t = 1; t <= sqrt_n; ++t)
      if ((u64{t} * t) % p == d2) {
        d = t;
        break;
      }
    if (!d) throw InternalError("no degree matches a modular eigenvector");

    std::vector<u64> chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = mulmod(mulmod(d, v[k], p), invmod(cd.sizes[k] % p, p), p);

    std::vector<RootSum> row(r);
    for (std::uint32_t c = 0; c < r; ++c) {
      const std::uint32_t o = cd.element_order(c);
      const std::uint32_t step = e / o;
      std::vector<u64> powers(o);
      for (std::uint32_t s = 0; s < o; ++s) powers[s] = chi[cd.power_map[c][s]];
      const u64 inv_o = invmod(o, p);
      std::uint32_t total = 0;
      for (std::uint32_t u = 0; u < o && total < d; ++u) {
        // m = (1/o) sum_s chi(g^s) z^{-step s u}
        const u64 w = powmod(z, (u64{e} - (u64{step} * u) % e) % e, p);
        u64 acc = 0, wp = 1;
        for (std::uint32_t s = 0; s < o; ++s) {
          acc = (acc + mulmod(powers[s], wp, p)) % p;
          wp = mulmod(wp, w, p);
        }
        const u64 m = mulmod(acc, inv_o, p);
        if (m > d) throw InternalError("eigenvalue multiplicity out of range");
        if (m) {
          row[c].emplace_back(step * u, static_cast<std::uint32_t>(m));
          total += static_cast<std::uint32_t>(m);
        }
      }
      if (total != d) throw InternalError("eigenvalue multiplicities do not sum to the degree");
    }
    degrees.push_back(d);
    values.push_back(std::move(row));
  }

  return assemble(std::move(cd), e, p, std::move(degrees), std::move(values));
}

std::vector<std::string> verify_table(const CharacterTable& t, const GroupTable& g) {
  std::vector<std::string> out;
  const auto& cd = t.classes();
  const std::size_t r = cd.count();
  const std::uint32_t e = t.exponent();
  const auto& ring = t.ring();
  const auto n = static_cast<std::int64_t>(g.order());

  if (t.size() != r)
    out.push_back(std::to_string(t.size()) + " irreducibles but " + std::to_string(r) + " classes");
  std::int64_t sum_sq = 0;
  for (auto d : t.degrees()) sum_sq += std::int64_t{d} * d;
  if (sum_sq != n)
    out.push_back("sum of squared degrees is " + std::to_string(sum_sq) + ", not " + std::to_string(n));
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (g.order() % t.degree(i))
      out.push_back("degree " + std::to_string(t.degree(i)) + " does not divide the group order");
    std::uint32_t at_one = 0;
    for (auto [k, m] : t.value(i, 0)) at_one += k == 0 ? m : 0;
    if (at_one != t.degree(i)) out.push_back("row " + std::to_string(i) + ": value at 1 is not the degree");
  }
  if (!out.empty() || t.size() != r) return out;

  // <chi_i, chi_j> = (1/|G|) sum_c |c| chi_i(c) chi_j(c^-1)
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      std::vector<std::int64_t> acc(e, 0);
      for (std::size_t c = 0; c < r; ++c)
        ring.multiply_accumulate(acc, t.value(i, c), t.value(j, cd.inverse_class[c]),
                                 static_cast<std::int64_t>(cd.sizes[c]));
      auto red = ring.reduce(std::move(acc));
      const std::int64_t want = i == j ? n : 0;
      bool ok = red[0] == want;
      for (std::size_t k = 1; k < red.size() && ok; ++k) ok = red[k] == 0;
      if (!ok)
        out.push_back("row orthogonality fails for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  // sum_i chi_i(c) chi_i(c'^-1) = |C_G(g_c)| delta
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t c2 = c; c2 < r; ++c2) {
      std::vector<std::int64_t> acc(e, 0);
      for (std::size_t i = 0; i < r; ++i)
        ring.multiply_accumulate(acc, t.value(i, c), t.value(i, cd.inverse_class[c2]), 1);
      auto red = ring.reduce(std::move(acc));
      const std::int64_t want = c == c2 ? n / static_cast<std::int64_t>(cd.sizes[c]) : 0;
      bool ok = red[0] == want;
      for (std::size_t k = 1; k < red.size() && ok; ++k) ok = red[k] == 0;
      if (!ok)
        out.push_back("column orthogonality fails for (" + std::to_string(c) + ", " + std::to_string(c2) + ")");
    }
  return out;
}

}  // namespace nested
