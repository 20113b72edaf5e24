#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nested/chartable.hpp"
#include "nested/classify.hpp"
#include "nested/constructions.hpp"
#include "nested/error.hpp"
#include "support.hpp"

using namespace nested;

namespace {

// Orthogonality and class data checked numerically, independent of the exact
// verifier.
void check_numeric(const GroupTable& g) {
  CAPTURE(g.label());
  auto t = compute_character_table(g);
  const auto cls = oracle::classes(g);
  REQUIRE(t.classes().count() == cls.size());
  REQUIRE(t.size() == cls.size());
  std::multiset<std::size_t> sizes_lib(t.classes().sizes.begin(), t.classes().sizes.end());
  std::multiset<std::size_t> sizes_bf;
  for (const auto& c : cls) sizes_bf.insert(c.size());
  CHECK(sizes_lib == sizes_bf);

  std::uint64_t squares = 0;
  for (auto d : t.degrees()) squares += std::uint64_t{d} * d;
  CHECK(squares == g.order());

  const double n = static_cast<double>(g.order());
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(std::abs(oracle::value(t, i, 0) - static_cast<double>(t.degree(i))) < 1e-6);
    for (std::size_t j = 0; j < t.size(); ++j) {
      std::complex<double> s = 0;
      for (std::size_t c = 0; c < t.classes().count(); ++c)
        s += static_cast<double>(t.classes().sizes[c]) * oracle::value(t, i, c) *
             std::conj(oracle::value(t, j, c));
      CHECK(std::abs(s - (i == j ? n : 0.0)) < 1e-6);
    }
    CHECK(oracle::to_set(t.kernel(i)) == oracle::kernel(t, i));
    CHECK(oracle::to_set(t.center(i)) == oracle::center(t, i));
    CHECK(oracle::is_normal(g, oracle::kernel(t, i)));
  }
  CHECK(verify_table(t, g).empty());
}

}  // namespace

TEST_CASE("S3 character table") {
  auto g = oracle::s3();
  auto t = compute_character_table(g);
  CHECK(t.classes().count() == 3);
  CHECK(t.degree_set() == std::vector<std::uint32_t>{1, 2});
  check_numeric(g);
}

TEST_CASE("Q8 character table") {
  auto g = quaternion(8);
  auto t = compute_character_table(g);
  CHECK(t.classes().count() == 5);
  std::vector<std::uint32_t> degs = t.degrees();
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<std::uint32_t>{1, 1, 1, 1, 2});
  // the degree-2 character is faithful and vanishes off the center
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degree(i) != 2) continue;
    CHECK(t.kernel(i).size() == 1);
    CHECK(t.center(i).size() == 2);
  }
  check_numeric(g);
}

TEST_CASE("Numeric orthogonality across families") {
  check_numeric(dihedral(16));
  check_numeric(semidihedral(32));
  check_numeric(sl_2_3());
  check_numeric(oracle::a4());
  check_numeric(oracle::a5());
  check_numeric(frobenius_pqr(2, 3, 5));
  check_numeric(extraspecial(3, 1, ExtraspecialVariant::Minus));
  check_numeric(abelian({3, 9}));
  check_numeric(example3(3, 2));
}

TEST_CASE("A5 has degrees 1, 3, 3, 4, 5") {
  auto t = compute_character_table(oracle::a5());
  std::vector<std::uint32_t> degs = t.degrees();
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<std::uint32_t>{1, 3, 3, 4, 5});
}

TEST_CASE("Class data") {
  auto g = dihedral(16);
  auto cd = conjugacy_classes(g);
  CHECK(cd.representatives[0] == g.identity());
  for (std::size_t c = 0; c < cd.count(); ++c) {
    for (Element x : cd.members[c]) CHECK(cd.class_of[x] == c);
    CHECK(cd.class_of[g.inv(cd.representatives[c])] == cd.inverse_class[c]);
    for (std::uint32_t s = 0; s < cd.element_order(c); ++s)
      CHECK(cd.power_map[c][s] == cd.class_of[g.pow(cd.representatives[c], s)]);
  }
}

TEST_CASE("Corrupted tables are caught by the verifier") {
  auto g = quaternion(8);
  auto t = compute_character_table(g);
  // a wrong degree breaks the sum of squares and column orthogonality
  auto bad = t;
  for (std::size_t i = 0; i < bad.size(); ++i)
    if (bad.degree(i) == 2) bad.set_degree(i, 3);
  CHECK_FALSE(verify_table(bad, g).empty());
  // permuting rows is harmless
  auto perm = t;
  perm.swap_rows(1, 4);
  CHECK(verify_table(perm, g).empty());
}

TEST_CASE("Prime choice") {
  auto p = choose_prime(8, 64, 10);
  CHECK(p % 8 == 1);
  CHECK(p > 16);
  CHECK(is_prime(p));
}

TEST_CASE("Order cap") {
  CHECK_THROWS_AS(compute_character_table(dihedral(16), 8), CapExceeded);
}
