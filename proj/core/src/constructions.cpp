#include "nested/constructions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>

#include "nested/classify.hpp"
#include "nested/error.hpp"

namespace nested {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void require_prime(std::uint32_t p, const char* name) {
  require(is_prime(p), std::string(name) + " = " + std::to_string(p) + " is not prime");
}

std::size_t checked_power(std::uint32_t p, std::size_t k, std::size_t cap, const char* op) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n > cap / p) throw CapExceeded(op, n * p, cap);
    n *= p;
  }
  return n;
}

std::string join_numbers(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  for (; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

// Polynomials over F_p, coefficients low degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t inv_lead = static_cast<std::uint32_t>(mod_pow(f.back(), p - 2, p));
  while (a.size() > df) {
    const std::uint64_t c = std::uint64_t{a.back()} * inv_lead % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * f[i] % p) % p);
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      for (std::size_t i = 0, c = code; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly first_irreducible(std::uint32_t p, std::uint32_t m) {
  std::size_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::size_t code = 0; code < count; ++code) {
    Poly f(m + 1, 0);
    f[m] = 1;
    std::size_t c = code;
    for (std::uint32_t i = 0; i < m; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
    if (irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

std::uint32_t determinant_mod(Matrix a, std::uint32_t p) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] % p == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p - det) % p;
    }
    det = det * a[c][c] % p;
    const std::uint64_t inv = mod_pow(a[c][c], p - 2, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t f = a[r][c] * inv % p;
      for (std::size_t k = c; k < n; ++k)
        a[r][k] = static_cast<std::uint32_t>((a[r][k] + p - f * a[c][k] % p) % p);
    }
  }
  return static_cast<std::uint32_t>(det);
}

GroupTable from_rule(std::size_t n, const std::string& label,
                     const std::function<Element(Element, Element)>& mul);

}  // namespace

std::vector<Matrix> field_multiplication_blocks(std::uint32_t p, std::uint32_t m) {
  require_prime(p, "p");
  require(m >= 1, "field degree must be positive");
  const Poly f = first_irreducible(p, m);
  std::vector<Poly> powers;  // t^s mod f for s < 2m - 1
  for (std::uint32_t s = 0; s + 1 < 2 * m; ++s) {
    Poly t(s + 1, 0);
    t[s] = 1;
    Poly r = poly_mod(t, f, p);
    r.resize(m, 0);
    powers.push_back(std::move(r));
  }
  std::vector<Matrix> blocks(m, Matrix(m, std::vector<std::uint32_t>(m, 0)));
  for (std::uint32_t j = 0; j < m; ++j)
    for (std::uint32_t k = 0; k < m; ++k)
      for (std::uint32_t l = 0; l < m; ++l) blocks[j][k][l] = powers[k + l][j];
  return blocks;
}

Matrix singular_span_member(const std::vector<Matrix>& blocks, std::uint32_t p) {
  const std::size_t m = blocks.size();
  if (m == 0) return {};
  const std::size_t n = blocks[0].size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) count *= p;
  for (std::size_t code = 1; code < count; ++code) {
    Matrix s(n, std::vector<std::uint32_t>(n, 0));
    std::size_t c = code;
    for (std::size_t j = 0; j < m; ++j, c /= p) {
      const std::uint32_t coeff = static_cast<std::uint32_t>(c % p);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          s[k][l] = (s[k][l] + coeff * blocks[j][k][l]) % p;
    }
    if (determinant_mod(s, p) == 0) return s;
  }
  return {};
}

PcPresentation example1_pc(const Example1Spec& spec) {
  const std::uint32_t p = spec.p;
  require_prime(p, "p");
  require(!spec.n.empty(), "example1 needs at least one exponent");
  for (std::size_t j = 0; j < spec.n.size(); ++j)
    require(spec.n[j] > 0 && (j == 0 || spec.n[j] > spec.n[j - 1]),
            "example1 exponents must be positive and strictly increasing");
  const std::size_t nx = 2 * spec.n.back(), m = spec.n.size();
  auto pc = PcPresentation::free_abelian_like(std::vector<std::uint32_t>(nx + m, p),
                                              "example1[" + std::to_string(p) + ";" +
                                                  join_numbers(spec.n) + "]");
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < spec.n[j]; ++i) {
      // [x_i, x_{i+n_j}] = z_j, so [x_{i+n_j}, x_i] = z_j^{-1}.
      pc.commutator(i + spec.n[j], i)[nx + j] = p - 1;
    }
  return pc;
}

GroupTable example1(const Example1Spec& spec, std::size_t order_cap) {
  auto pc = example1_pc(spec);
  checked_power(spec.p, pc.rank(), order_cap, "example1");
  return build_from_pc(pc, order_cap).with_label(pc.label);
}

GroupTable example3(std::uint32_t p, std::uint32_t n, std::size_t order_cap) {
  require_prime(p, "p");
  require(p != 2, "example3 requires an odd prime");
  require(n >= 1, "example3 requires n >= 1");
  const std::size_t order = checked_power(p, 2 * n + 1, order_cap, "example3");
  const std::size_t px = order / checked_power(p, n, order_cap, "example3");  // p^{n+1}
  const std::size_t py = order / px;                                          // p^n
  // x^a y^b at index a * py + b; y^b x^c y^-b = x^{c u^{-b}}, u = 1 + p.
  std::vector<std::uint64_t> uinv(py);
  const std::uint64_t u_inverse = mod_pow(1 + p, py - 1, px);
  for (std::size_t b = 0; b < py; ++b) uinv[b] = mod_pow(u_inverse, b, px);
  return from_rule(order, "example3[" + std::to_string(p) + ";" + std::to_string(n) + "]",
                   [&](Element s, Element t) {
                     const std::size_t a = s / py, b = s % py, c = t / py, d = t % py;
                     const std::size_t x = (a + c * uinv[b]) % px;
                     return static_cast<Element>(x * py + (b + d) % py);
                   });
}

PcPresentation example4_pc(const Example4Spec& spec) {
  const std::uint32_t p = spec.p;
  require_prime(p, "p");
  require(!spec.m.empty(), "example4 needs at least one level");
  for (std::size_t i = 0; i < spec.m.size(); ++i) {
    require(spec.m[i] >= 1, "example4 level sizes must be positive");
    if (i > 0) require(2 * spec.m[i - 1] <= spec.m[i], "example4 needs m_i <= m_{i+1}/2");
  }
  require(spec.blocks.empty() || spec.blocks.size() == spec.m.size(),
          "example4 needs one matrix family per level");
  const std::size_t r = spec.m.size(), nx = 2 * spec.m.back();
  std::vector<std::vector<Matrix>> blocks(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint32_t mi = spec.m[i];
    blocks[i] = spec.blocks.empty() ? field_multiplication_blocks(p, mi) : spec.blocks[i];
    require(blocks[i].size() == mi, "level " + std::to_string(i + 1) + " needs m_i matrices");
    for (const auto& b : blocks[i]) {
      require(b.size() == mi, "level " + std::to_string(i + 1) + " matrices must be m_i x m_i");
      for (const auto& row : b) {
        require(row.size() == mi, "level " + std::to_string(i + 1) + " matrices must be m_i x m_i");
        for (auto e : row) require(e < p, "matrix entries must lie in 0..p-1");
      }
    }
    Matrix bad = singular_span_member(blocks[i], p);
    if (!bad.empty()) {
      std::string w;
      for (const auto& row : bad) w += "[" + join_numbers(row) + "]";
      throw InputError("level " + std::to_string(i + 1) + " span contains the singular matrix " + w);
    }
  }
  std::size_t nz = 0;
  std::vector<std::size_t> zbase(r);
  for (std::size_t i = 0; i < r; ++i) {
    zbase[i] = nx + nz;
    nz += spec.m[i];
  }
  auto pc = PcPresentation::free_abelian_like(std::vector<std::uint32_t>(nx + nz, p),
                                              "example4[" + std::to_string(p) + ";" +
                                                  join_numbers(spec.m) + "]");
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint32_t mi = spec.m[i];
    for (std::uint32_t l = mi; l < 2 * mi; ++l)  // 0-based x_l with m_i < l+1 <= 2 m_i
      for (std::uint32_t k = 0; k < mi; ++k)
        for (std::uint32_t j = 0; j < mi; ++j) {
          const std::uint32_t a = blocks[i][j][k][l - mi];
          pc.commutator(l, k)[zbase[i] + j] = (p - a) % p;
        }
  }
  return pc;
}

GroupTable example4(const Example4Spec& spec, std::size_t order_cap) {
  auto pc = example4_pc(spec);
  checked_power(spec.p, pc.rank(), order_cap, "example4");
  return build_from_pc(pc, order_cap).with_label(pc.label);
}

namespace {

GroupTable from_rule(std::size_t n, const std::string& label,
                     const std::function<Element(Element, Element)>& mul) {
  if (n > kMaxTableOrder) throw CapExceeded(label, n, kMaxTableOrder);
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[std::size_t{a} * n + b] = mul(a, b);
  return GroupTable::from_cayley(n, std::move(table), label);
}

// r^a s^b at index 2a + b, with s r s^-1 = r^u and s^2 = r^t.
GroupTable metacyclic(std::size_t half, std::size_t u, std::size_t t, const std::string& label) {
  return from_rule(2 * half, label, [=](Element x, Element y) {
    const std::size_t a = x / 2, b = x % 2, c = y / 2, d = y % 2;
    std::size_t e = (a + (b ? c * u : c) + (b && d ? t : 0)) % half;
    return static_cast<Element>(2 * e + (b ^ d));
  });
}

bool is_power_of_two(std::size_t n) { return n && (n & (n - 1)) == 0; }

}  // namespace

GroupTable cyclic(std::size_t n) {
  require(n >= 1, "cyclic group order must be positive");
  return from_rule(n, "C" + std::to_string(n),
                   [n](Element a, Element b) { return static_cast<Element>((a + b) % n); });
}

GroupTable abelian(const std::vector<std::size_t>& type, std::size_t order_cap) {
  std::size_t n = 1;
  std::string label;
  for (auto k : type) {
    require(k >= 1, "cyclic factor orders must be positive");
    if (n > order_cap / k) throw CapExceeded("abelian", n * k, order_cap);
    n *= k;
    label += (label.empty() ? "" : "x") + ("C" + std::to_string(k));
  }
  if (label.empty()) label = "C1";
  return from_rule(n, label, [&type](Element a, Element b) {
    std::size_t out = 0, radix = 1;
    for (auto it = type.rbegin(); it != type.rend(); ++it) {
      const std::size_t k = *it;
      out += ((a / radix) % k + (b / radix) % k) % k * radix;
      radix *= k;
    }
    return static_cast<Element>(out);
  });
}

GroupTable dihedral(std::size_t order) {
  require(order >= 4 && order % 2 == 0, "dihedral group order must be even and at least 4");
  const std::size_t h = order / 2;
  return metacyclic(h, h - 1, 0, "D" + std::to_string(order));
}

GroupTable quaternion(std::size_t order) {
  require(order >= 8 && is_power_of_two(order), "quaternion group order must be 2^k, k >= 3");
  const std::size_t h = order / 2;
  return metacyclic(h, h - 1, h / 2, "Q" + std::to_string(order));
}

GroupTable semidihedral(std::size_t order) {
  require(order >= 16 && is_power_of_two(order), "semidihedral group order must be 2^k, k >= 4");
  const std::size_t h = order / 2;
  return metacyclic(h, h / 2 - 1, 0, "SD" + std::to_string(order));
}

PcPresentation extraspecial_pc(std::uint32_t p, std::uint32_t n, ExtraspecialVariant v) {
  require_prime(p, "p");
  require(n >= 1, "extraspecial rank must be positive");
  const std::size_t k = 2 * n + 1, z = 2 * n;
  auto pc = PcPresentation::free_abelian_like(
      std::vector<std::uint32_t>(k, p),
      "extraspecial[" + std::to_string(p) + ";" + std::to_string(n) +
          (v == ExtraspecialVariant::Plus ? ";+]" : ";-]"));
  // Generators x_1, y_1, ..., x_n, y_n, z with [y_i, x_i] = z.
  for (std::uint32_t i = 0; i < n; ++i) pc.commutator(2 * i + 1, 2 * i)[z] = 1;
  if (v == ExtraspecialVariant::Minus) {
    pc.power(0)[z] = 1;
    if (p == 2) pc.power(1)[z] = 1;
  }
  return pc;
}

GroupTable extraspecial(std::uint32_t p, std::uint32_t n, ExtraspecialVariant v,
                        std::size_t order_cap) {
  auto pc = extraspecial_pc(p, n, v);
  checked_power(p, pc.rank(), order_cap, "extraspecial");
  return build_from_pc(pc, order_cap).with_label(pc.label);
}

PcPresentation heisenberg_pc(std::uint32_t p, std::uint32_t m) {
  Example4Spec spec{p, {m}, {}};
  auto pc = example4_pc(spec);
  pc.label = "heisenberg[" + std::to_string(p) + ";" + std::to_string(m) + "]";
  return pc;
}

GroupTable heisenberg(std::uint32_t p, std::uint32_t m, std::size_t order_cap) {
  auto pc = heisenberg_pc(p, m);
  checked_power(p, pc.rank(), order_cap, "heisenberg");
  return build_from_pc(pc, order_cap).with_label(pc.label);
}

GroupTable sl_2_3() {
  using M = std::array<std::uint32_t, 4>;  // a b / c d
  std::vector<M> elems{{1, 0, 0, 1}};
  for (std::uint32_t code = 0; code < 81; ++code) {
    M x{code % 3, code / 3 % 3, code / 9 % 3, code / 27};
    if ((x[0] * x[3] + 2 * x[1] * x[2]) % 3 == 1 && x != elems[0]) elems.push_back(x);
  }
  std::map<M, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
  return from_rule(elems.size(), "SL(2,3)", [&](Element s, Element t) {
    const M& a = elems[s];
    const M& b = elems[t];
    M c{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
        (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
    return index.at(c);
  });
}

GroupTable frobenius_pqr(std::uint32_t p, std::uint32_t q, std::uint32_t r) {
  require_prime(p, "p");
  require_prime(q, "q");
  require_prime(r, "r");
  require(q != r, "frobenius_pqr needs distinct q and r");
  require((q - 1) % p == 0, "frobenius_pqr needs p | q-1");
  require((r - 1) % p == 0, "frobenius_pqr needs p | r-1");
  auto unit_of_order_p = [p](std::uint32_t m) {
    for (std::uint64_t a = 2; a < m; ++a)
      if (mod_pow(a, p, m) == 1) return a;
    throw InternalError("no unit of order p");
  };
  const std::uint64_t alpha = unit_of_order_p(q), beta = unit_of_order_p(r);
  std::vector<std::uint64_t> ap(p), bp(p);
  for (std::uint32_t c = 0; c < p; ++c) {
    ap[c] = mod_pow(alpha, c, q);
    bp[c] = mod_pow(beta, c, r);
  }
  const std::size_t n = std::size_t{p} * q * r;
  // (a, b, c) = x^a y^b w^c at index (a r + b) p + c, with w x w^-1 = x^alpha.
  return from_rule(n, "frobenius[" + std::to_string(p) + ";" + std::to_string(q) + ";" + std::to_string(r) + "]",
                   [&](Element s, Element t) {
                     const std::size_t c1 = s % p, b1 = s / p % r, a1 = s / p / r;
                     const std::size_t c2 = t % p, b2 = t / p % r, a2 = t / p / r;
                     const std::size_t a = (a1 + ap[c1] * a2) % q, b = (b1 + bp[c1] * b2) % r;
                     return static_cast<Element>((a * r + b) * p + (c1 + c2) % p);
                   });
}

}  // namespace nested
