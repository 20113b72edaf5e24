#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nested/classify.hpp"
#include "nested/constructions.hpp"
#include "nested/io.hpp"
#include "support.hpp"

using namespace nested;

namespace {

bool subset(const oracle::Set& a, const oracle::Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Flags recomputed from complex character values and set arithmetic only.
struct BruteFlags {
  bool nested = true, nbd = true, strict = true, gvz = true, vz = true;
  bool kern = true, nlkern = true;
};

BruteFlags brute_flags(const GroupTable& g, const CharacterTable& t) {
  BruteFlags f;
  const std::size_t k = t.size();
  std::vector<oracle::Set> z(k), ker(k);
  for (std::size_t i = 0; i < k; ++i) z[i] = oracle::center(t, i), ker[i] = oracle::kernel(t, i);
  const auto zg = oracle::center(g);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!subset(z[i], z[j]) && !subset(z[j], z[i])) f.nested = false;
      if (!subset(ker[i], ker[j]) && !subset(ker[j], ker[i])) {
        f.kern = false;
        if (t.degree(i) > 1 && t.degree(j) > 1) f.nlkern = false;
      }
      // psi(1) <= chi(1) forces Z(chi) <= Z(psi); strictly, < forces <
      if (t.degree(j) <= t.degree(i) && !subset(z[i], z[j])) f.nbd = false;
      if (t.degree(j) < t.degree(i) && !(subset(z[i], z[j]) && z[i].size() < z[j].size()))
        f.strict = false;
    }
    for (std::size_t c = 0; c < t.classes().count(); ++c) {
      const Element rep = t.classes().representatives[c];
      const bool zero = std::abs(oracle::value(t, i, c)) < 1e-6;
      if (!z[i].count(rep) && !zero) f.gvz = false;
      if (t.degree(i) > 1 && !zg.count(rep) && !zero) f.vz = false;
    }
  }
  f.strict = f.strict && f.nbd;
  return f;
}

// Z_N from the definition, over the oracle lattice.
bool brute_quotient_centers_nested(const GroupTable& g) {
  const auto lat = oracle::normal_subgroups(g);
  std::vector<oracle::Set> zs;
  for (const auto& n : lat) {
    oracle::Set zn;
    for (Element x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Element y = 0; y < g.order() && ok; ++y) ok = n.count(g.comm(x, y)) > 0;
      if (ok) zn.insert(x);
    }
    zs.push_back(zn);
  }
  for (const auto& a : zs)
    for (const auto& b : zs)
      if (!subset(a, b) && !subset(b, a)) return false;
  return true;
}

bool brute_camina(const GroupTable& g, const oracle::Set& n) {
  for (Element x = 0; x < g.order(); ++x) {
    if (n.count(x)) continue;
    oracle::Set cls;
    for (Element t = 0; t < g.order(); ++t) cls.insert(g.conj(x, t));
    for (Element m : n)
      if (!cls.count(g.mul(x, m))) return false;
  }
  return true;
}

bool brute_extraspecial(const GroupTable& q, std::uint32_t p) {
  const auto z = oracle::center(q);
  const auto w = oracle::all(q);
  const auto d = oracle::commutators(q, w, w);
  if (z.size() != p || d != z) return false;
  // G/Z elementary abelian: x^p in Z for all x
  for (Element x = 0; x < q.order(); ++x)
    if (!z.count(q.pow(x, p))) return false;
  return true;
}

// Every index-p subgroup N of Z(G) gives an extraspecial G/N.
bool brute_semi_extraspecial(const GroupTable& g, std::uint32_t p) {
  auto gp = std::make_shared<const GroupTable>(g);
  const auto z = oracle::center(g);
  if (z.size() == g.order()) return false;
  for (const auto& n : oracle::normal_subgroups(g)) {
    if (!subset(n, z) || n.size() * p != z.size()) continue;
    std::vector<Element> el(n.begin(), n.end());
    auto q = quotient(gp, Subgroup::from_elements(g.order(), el));
    if (!brute_extraspecial(*q.target, p)) return false;
  }
  return true;
}

void compare_brute(const GroupTable& g) {
  CAPTURE(g.label());
  GroupAnalysis a(g);
  auto r = classify(a);
  auto f = brute_flags(g, a.table());
  CHECK(r.is_nested == f.nested);
  CHECK(r.is_nested_by_degrees == f.nbd);
  CHECK(r.is_strictly_nested_by_degrees == f.strict);
  CHECK(r.is_gvz == f.gvz);
  CHECK(r.is_vz == f.vz);
  CHECK(r.kern_is_chain == f.kern);
  CHECK(r.nlkern_is_chain == f.nlkern);
  CHECK(is_nested_via_quotient_centers(a) == brute_quotient_centers_nested(g));
  CHECK(r.normal_lattice_is_chain == [&] {
    const auto lat = oracle::normal_subgroups(g);
    for (const auto& x : lat)
      for (const auto& y : lat)
        if (!subset(x, y) && !subset(y, x)) return false;
    return true;
  }());
}

void compare_oracle_file(const std::string& dir) {
  const auto rows = oracle::read_oracle(oracle::corpus_dir() / dir / "ORACLE.txt");
  const auto entries = list_corpus(oracle::corpus_dir() / dir);
  REQUIRE(rows.size() == entries.size());
  std::map<std::string, oracle::OracleRow> by_label;
  for (const auto& r : rows) by_label[r.label] = r;
  for (const auto& e : entries) {
    CAPTURE(e.label);
    REQUIRE(by_label.count(e.label));
    const auto& o = by_label[e.label];
    GroupAnalysis a(load_group(e.path));
    auto r = classify(a);
    CHECK(r.nilpotency_class.value_or(0) == o.nilclass);
    CHECK(r.class_count == o.nclasses);
    CHECK(r.is_nested == o.nested);
    CHECK(r.is_nested_by_degrees == o.nbd);
    CHECK(r.is_strictly_nested_by_degrees == o.strict);
    CHECK(r.is_gvz == o.gvz);
    CHECK(r.degrees == o.degrees);
    CHECK(is_nested_via_quotient_centers(a) == r.is_nested);
  }
}

}  // namespace

TEST_CASE("Order 32 corpus matches the reference oracle") { compare_oracle_file("order32"); }

TEST_CASE("Order 243 corpus matches the reference oracle") { compare_oracle_file("order243"); }

TEST_CASE("Flags agree with brute force on assorted groups") {
  for (const auto& g :
       {oracle::s3(), quaternion(8), dihedral(8), dihedral(16), semidihedral(16), sl_2_3(),
        oracle::a4(), frobenius_pqr(2, 3, 5), extraspecial(3, 1, ExtraspecialVariant::Plus),
        example3(3, 2), abelian({2, 6}),
        direct_product(quaternion(8), extraspecial(3, 1, ExtraspecialVariant::Plus))}) {
    compare_brute(g);
  }
}

TEST_CASE("Corpus groups agree with brute force") {
  for (const auto& e : list_corpus(oracle::corpus_dir() / "order32")) compare_brute(load_group(e.path));
}

TEST_CASE("32.9 is nested but not nested by degrees") {
  auto r = classify(load_group(oracle::corpus_dir() / "named" / "32.9.pc"));
  CHECK(r.is_nested);
  CHECK_FALSE(r.is_nested_by_degrees);
  REQUIRE(r.chain);
}

TEST_CASE("64.258 is nested, nested by degrees, not GVZ") {
  auto r = classify(load_group(oracle::corpus_dir() / "named" / "64.258.pc"));
  CHECK(r.nilpotency_class == 3u);
  CHECK(r.class_count == 22);
  CHECK(r.is_nested);
  CHECK(r.is_nested_by_degrees);
  CHECK(r.is_strictly_nested_by_degrees);
  CHECK_FALSE(r.is_gvz);
}

TEST_CASE("Abelian groups") {
  auto r = classify(cyclic(6));
  CHECK(r.is_abelian);
  CHECK(r.is_nested);
  CHECK(r.is_nested_by_degrees);
  CHECK(r.is_strictly_nested_by_degrees);
  CHECK(r.is_gvz);
  REQUIRE(r.chain);
  CHECK(r.chain->terms.terms.size() == 1);
  CHECK(r.chain->nested_length() == 0);
  CHECK(r.kern_is_chain == false);  // C6 has incomparable kernels of index 2 and 3
  CHECK(r.nlkern_is_chain);
  auto c8 = classify(cyclic(8));
  CHECK(c8.kern_is_chain);
  CHECK(c8.nlkern_is_chain);
}

TEST_CASE("Extraspecial chain has length one") {
  for (auto v : {ExtraspecialVariant::Plus, ExtraspecialVariant::Minus}) {
    auto g = extraspecial(3, 1, v);
    auto r = classify(g);
    REQUIRE(r.chain);
    CHECK(r.chain->nested_length() == 1);
    CHECK(r.chain->terms.terms.back() == center(g));
    CHECK(r.is_semi_extraspecial);
    CHECK(r.is_ultraspecial);
  }
}

TEST_CASE("D8 flags") {
  auto r = classify(dihedral(8));
  CHECK(r.is_nested);
  CHECK(r.is_nested_by_degrees);
  CHECK(r.is_gvz);
  CHECK(r.nlkern_is_chain);
  CHECK_FALSE(r.kern_is_chain);
}

TEST_CASE("Kernel chains") {
  auto s3 = classify(oracle::s3());
  CHECK(s3.kern_is_chain);
  auto q8 = classify(quaternion(8));
  CHECK_FALSE(q8.kern_is_chain);
  CHECK(q8.nlkern_is_chain);
}

TEST_CASE("SL(2,3) is nested by degrees but not strictly") {
  auto r = classify(sl_2_3());
  CHECK(r.order == 24);
  CHECK(r.cd == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(r.degrees == std::vector<std::uint32_t>{1, 1, 1, 2, 2, 2, 3});
  CHECK(r.is_nested_by_degrees);
  CHECK_FALSE(r.is_strictly_nested_by_degrees);
  REQUIRE(r.degree_centers);
  CHECK(r.degree_centers->y[1] == r.degree_centers->y[2]);
}

TEST_CASE("Maximal class 2-groups are nested, not nested by degrees") {
  for (std::size_t n : {16u, 32u, 64u}) {
    for (const auto& g : {dihedral(n), quaternion(n), semidihedral(n)}) {
      CAPTURE(g.label());
      auto r = classify(g);
      CHECK(r.is_nested);
      CHECK_FALSE(r.is_nested_by_degrees);
    }
  }
}

TEST_CASE("A5 is nested") {
  GroupAnalysis a(oracle::a5());
  CHECK(classify(a).is_nested);
  CHECK(is_nested_via_quotient_centers(a));
}

TEST_CASE("Product of extraspecial groups with coprime centers is not nested") {
  auto g = direct_product(extraspecial(2, 1, ExtraspecialVariant::Minus),
                          extraspecial(3, 1, ExtraspecialVariant::Plus));
  GroupAnalysis a(g);
  auto r = classify(a);
  CHECK_FALSE(r.is_nested);
  REQUIRE(r.not_nested_witness);
  auto [i, j] = *r.not_nested_witness;
  CHECK_FALSE(a.centers()[i].comparable_with(a.centers()[j]));
  CHECK_FALSE(is_nested_via_quotient_centers(a));
  CHECK(quotient_center_witness(a).has_value());
  CHECK_FALSE(brute_quotient_centers_nested(g));
}

TEST_CASE("Class-2 nilpotent groups are GVZ") {
  for (const auto& e : list_corpus(oracle::corpus_dir() / "order243")) {
    auto r = classify(load_group(e.path));
    if (r.nilpotency_class == 2u) CHECK(r.is_gvz);
  }
}

TEST_CASE("Semi-extraspecial and ultraspecial against brute force") {
  for (const auto& g : {heisenberg(2, 2), heisenberg(3, 1), example1({2, {1}}),
                        example1({2, {1, 2}}), example4({2, {1, 2}}), dihedral(16),
                        extraspecial(2, 2, ExtraspecialVariant::Plus)}) {
    CAPTURE(g.label());
    GroupAnalysis a(g);
    const auto p = *p_group_prime(g);
    const bool se = brute_semi_extraspecial(g, p);
    CHECK(is_semi_extraspecial(a) == se);
    const auto z = oracle::center(g).size();
    CHECK(is_ultraspecial(a) == (se && g.order() == z * z * z));
  }
  GroupAnalysis h(heisenberg(2, 2));
  CHECK(h.order() == 64);
  CHECK(is_ultraspecial(h));
  GroupAnalysis s(sl_2_3());
  CHECK_FALSE(is_semi_extraspecial(s));
}

TEST_CASE("Camina pairs against brute force") {
  for (const auto& g : {example3(3, 1), example3(3, 2), quaternion(8), frobenius_pqr(2, 3, 5),
                        extraspecial(3, 1, ExtraspecialVariant::Plus)}) {
    CAPTURE(g.label());
    GroupAnalysis a(g);
    for (const auto& n : a.lattice().members())
      CHECK(is_camina_pair(a, n) == brute_camina(g, oracle::to_set(n)));
  }
  // G_1 of the exponent-p^2 family: (G, G') is Camina
  GroupAnalysis a(example3(3, 1));
  CHECK(is_camina_pair(a, a.derived()));
  // Z_n = [X_n, G_n] with X_n = Z(G_n) is trivial, so (G_n, Z_n) holds vacuously
  for (std::uint32_t n : {1u, 2u}) {
    GroupAnalysis b(example3(3, n));
    const auto zn = b.bracket(b.center());
    CHECK(zn.size() == 1);
    CHECK(is_camina_pair(b, zn));
  }
}

TEST_CASE("Frobenius detection") {
  auto g = frobenius_pqr(2, 3, 5);
  CHECK(g.order() == 30);
  auto d = derived_subgroup(g);
  CHECK(d.size() == 15);
  CHECK(is_frobenius_with_kernel(g, d));
  CHECK_FALSE(is_frobenius_with_kernel(g, center(g)));
  // brute force: every element outside the kernel has trivial centralizer in it
  const auto ds = oracle::to_set(d);
  for (Element x = 0; x < g.order(); ++x) {
    if (ds.count(x)) continue;
    for (Element k : ds)
      if (k != g.identity()) CHECK(g.mul(x, k) != g.mul(k, x));
  }
}

TEST_CASE("Numeric helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(60) == std::vector<std::uint32_t>{2, 3, 5});
  CHECK(log_prime(243, 3) == 5u);
  CHECK(log_prime(48, 2) == std::nullopt);
}
