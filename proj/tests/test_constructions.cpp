#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nested/classify.hpp"
#include "nested/constructions.hpp"
#include "nested/error.hpp"
#include "support.hpp"

using namespace nested;

namespace {

std::set<std::uint32_t> brute_cd(const GroupTable& g) {
  // cd from the numeric table: the library provides the table, but degrees are
  // re-derived as |chi(1)| from complex values.
  auto t = compute_character_table(g);
  std::set<std::uint32_t> cd;
  for (std::size_t i = 0; i < t.size(); ++i)
    cd.insert(static_cast<std::uint32_t>(std::lround(std::abs(oracle::value(t, i, 0)))));
  return cd;
}

std::size_t derived_order(const GroupTable& g) {
  const auto w = oracle::all(g);
  return oracle::commutators(g, w, w).size();
}

bool extraspecial_by_hand(const GroupTable& g, std::uint32_t p) {
  const auto z = oracle::center(g);
  const auto w = oracle::all(g);
  if (z.size() != p || oracle::commutators(g, w, w) != z) return false;
  for (Element x = 0; x < g.order(); ++x)
    if (!z.count(g.pow(x, p))) return false;
  return true;
}

// det over F_p by Gaussian elimination.
bool nonsingular(Matrix m, std::uint32_t p) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] % p == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[c], m[piv]);
    std::uint64_t inv = 1;
    for (std::uint64_t e = p - 2, b = m[c][c]; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t f = m[r][c] * inv % p;
      for (std::size_t k = c; k < n; ++k) m[r][k] = static_cast<std::uint32_t>((m[r][k] + p * p - f * m[c][k] % p) % p);
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Example 1: smallest cases") {
  auto g = example1({2, {1}});
  CHECK(g.order() == 8);
  CHECK(brute_cd(g) == std::set<std::uint32_t>{1, 2});
  auto h = example1({3, {1}});
  CHECK(h.order() == 27);
  CHECK(exponent(h) == 3);
  CHECK(extraspecial_by_hand(h, 3));
}

TEST_CASE("Example 1 with two levels") {
  auto g = example1({2, {1, 2}});
  CHECK(g.order() == 64);
  CHECK(brute_cd(g) == std::set<std::uint32_t>{1, 2, 4});
  auto r = classify(g);
  CHECK(r.nilpotency_class == 2u);
  CHECK(r.is_nested_by_degrees);
  CHECK(r.cd == std::vector<std::uint32_t>{1, 2, 4});
}

TEST_CASE("Example 1 rejects bad level sizes") {
  CHECK_THROWS_AS(example1({2, {2, 1}}), InputError);
  CHECK_THROWS_AS(example1({2, {}}), InputError);
  CHECK_THROWS_AS(example1({4, {1}}), InputError);
}

TEST_CASE("Example 3 family") {
  auto g = example3(3, 1);
  CHECK(g.order() == 27);
  CHECK(nilpotency_class(g) == 2u);
  CHECK(exponent(g) == 9);
  auto h = example3(3, 2);
  CHECK(h.order() == 243);
  auto r = classify(h);
  CHECK(r.nilpotency_class == 3u);
  CHECK(r.is_nested);
  CHECK(r.is_gvz);
  auto k = example3(5, 1);
  CHECK(k.order() == 125);
  CHECK(derived_order(k) == 5);
  // G' consists of p-th powers
  oracle::Set powers;
  for (Element x = 0; x < k.order(); ++x) powers.insert(k.pow(x, 5));
  const auto w = oracle::all(k);
  for (Element d : oracle::commutators(k, w, w)) CHECK(powers.count(d));
  CHECK_THROWS_AS(example3(2, 1), InputError);
  CHECK_THROWS_AS(example3(3, 4, 1000), CapExceeded);
}

TEST_CASE("Example 3: class grows with n") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    auto r = classify(example3(3, n, 3u * 3 * 3 * 3 * 3 * 3 * 3));
    CHECK(r.nilpotency_class == n + 1);
    CHECK(r.is_nested);
    CHECK(r.is_gvz);
  }
}

TEST_CASE("Example 4 degenerate level is extraspecial") {
  for (std::uint32_t p : {2u, 3u}) {
    auto g = example4({p, {1}, {{Matrix{{1}}}}});
    CHECK(g.order() == p * p * p);
    CHECK(extraspecial_by_hand(g, p));
  }
}

TEST_CASE("Example 4 with a field block is ultraspecial") {
  auto g = example4({2, {2}, {}});
  CHECK(g.order() == 64);
  const auto z = oracle::center(g).size();
  CHECK(z == 4);
  CHECK(g.order() / z == z * z);
  GroupAnalysis a(g);
  CHECK(is_ultraspecial(a));
}

TEST_CASE("Example 4 with two levels") {
  auto g = example4({2, {1, 2}, {}});
  CHECK(g.order() == 128);
  CHECK(derived_order(g) == 8);
  CHECK(brute_cd(g) == std::set<std::uint32_t>{1, 2, 4});
}

TEST_CASE("Example 4 rejects a singular span") {
  Matrix id = {{1, 0}, {0, 1}}, shear = {{1, 1}, {0, 1}};
  // over F_2, id + shear = [[0,1],[0,0]] is singular
  CHECK_FALSE(nonsingular({{0, 1}, {0, 0}}, 2));
  CHECK_FALSE(singular_span_member({id, shear}, 2).empty());
  CHECK_THROWS_AS(example4({2, {2}, {{id, shear}}}), InputError);
  CHECK_THROWS_AS(example4({2, {1, 1}, {}}), InputError);  // 2 m_1 > m_2
}

TEST_CASE("Field multiplication blocks span only nonsingular matrices") {
  for (auto [p, m] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
    auto blocks = field_multiplication_blocks(p, m);
    REQUIRE(blocks.size() == m);
    CHECK(singular_span_member(blocks, p).empty());
    std::size_t combos = 1;
    for (std::uint32_t i = 0; i < m; ++i) combos *= p;
    for (std::size_t code = 1; code < combos; ++code) {
      Matrix s(m, std::vector<std::uint32_t>(m, 0));
      std::size_t c = code;
      for (std::uint32_t j = 0; j < m; ++j, c /= p)
        for (std::uint32_t r = 0; r < m; ++r)
          for (std::uint32_t k = 0; k < m; ++k) s[r][k] = (s[r][k] + (c % p) * blocks[j][r][k]) % p;
      CHECK(nonsingular(s, p));
    }
  }
}

TEST_CASE("Standard families pass table invariants") {
  for (const auto& g : {cyclic(9), abelian({2, 4, 3}), dihedral(32), quaternion(16),
                        semidihedral(32), extraspecial(2, 2, ExtraspecialVariant::Minus),
                        heisenberg(3, 1), sl_2_3(), frobenius_pqr(3, 7, 13)}) {
    CAPTURE(g.label());
    CHECK(g.invariant_violations().empty());
  }
  CHECK(dihedral(32).order() == 32);
  CHECK(extraspecial(2, 2, ExtraspecialVariant::Minus).order() == 32);
  CHECK(frobenius_pqr(3, 7, 13).order() == 273);
  CHECK(heisenberg(3, 1).order() == 27);
  CHECK(heisenberg(2, 2).order() == 64);
  CHECK(dihedral(12).order() == 12);
  CHECK_THROWS_AS(dihedral(7), InputError);
  CHECK_THROWS_AS(quaternion(12), InputError);
  CHECK_THROWS_AS(semidihedral(8), InputError);
}

TEST_CASE("Extraspecial 2-groups: plus and minus differ") {
  // 2^{1+2}_+ = D8 has five involutions, 2^{1+2}_- = Q8 has one
  auto count = [](const GroupTable& g) {
    std::size_t k = 0;
    for (Element x = 0; x < g.order(); ++x) k += g.element_order(x) == 2;
    return k;
  };
  CHECK(count(extraspecial(2, 1, ExtraspecialVariant::Plus)) == 5);
  CHECK(count(extraspecial(2, 1, ExtraspecialVariant::Minus)) == 1);
  // odd p: plus has exponent p, minus exponent p^2
  CHECK(exponent(extraspecial(3, 1, ExtraspecialVariant::Plus)) == 3);
  CHECK(exponent(extraspecial(3, 1, ExtraspecialVariant::Minus)) == 9);
}

TEST_CASE("SL(2,3)") {
  auto g = sl_2_3();
  CHECK(g.order() == 24);
  CHECK(center(g).size() == 2);
  CHECK(brute_cd(g) == std::set<std::uint32_t>{1, 2, 3});
}

TEST_CASE("Q8 is of maximal class with an nlKern chain") {
  auto r = classify(quaternion(8));
  CHECK(r.coclass == 1u);
  CHECK(r.nlkern_is_chain);
}

TEST_CASE("Frobenius group of order pqr") {
  auto g = frobenius_pqr(2, 3, 5);
  CHECK(g.order() == 30);
  CHECK_THROWS_AS(frobenius_pqr(3, 7, 11), InputError);
  CHECK_THROWS_AS(frobenius_pqr(2, 3, 3), InputError);
  CHECK_THROWS_AS(frobenius_pqr(4, 5, 13), InputError);

  GroupAnalysis a(g);
  const auto& d = a.derived();
  CHECK(d.size() == 15);
  CHECK(is_frobenius_with_kernel(g, d));
  auto r = classify(a);
  CHECK_FALSE(r.kern_is_chain);
  // every proper subgroup of G' (all normal in G) is the kernel of a nonlinear
  // irreducible
  const auto& t = a.table();
  std::set<oracle::Set> nl;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.degree(i) > 1) nl.insert(oracle::kernel(t, i));
  for (const auto& n : oracle::normal_subgroups(g)) {
    if (n.size() >= 15 || !std::includes(oracle::to_set(d).begin(), oracle::to_set(d).end(),
                                         n.begin(), n.end()))
      continue;
    CHECK(nl.count(n));
  }
  CHECK(r.nlkern_is_chain == false);
}
