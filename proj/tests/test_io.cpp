#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nested/constructions.hpp"
#include "nested/error.hpp"
#include "nested/io.hpp"
#include "support.hpp"

using namespace nested;

namespace {

std::size_t error_line(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.line();
  }
  FAIL("no InputError thrown");
  return 0;
}

}  // namespace

TEST_CASE("Cayley parse errors carry line numbers") {
  CHECK(error_line([] { parse_cayley("cayley 2 C2\n0 1\n1 0 1\n"); }) == 3);
  CHECK(error_line([] { parse_cayley("cayley 2 C2\n0 1\n1 5\n"); }) == 3);
  CHECK(error_line([] { parse_cayley("caley 2 C2\n0 1\n1 0\n"); }) == 1);
  CHECK(error_line([] { parse_cayley("cayley 2 C2\n0 1\n1 x\n"); }) == 3);
  // truncated
  CHECK_THROWS_AS(parse_cayley("cayley 3 C3\n0 1 2\n1 2 0\n"), InputError);
  CHECK_THROWS_AS(parse_cayley(""), InputError);
}

TEST_CASE("pc parse errors") {
  // truncated: three relation lines promised for k = 2
  CHECK_THROWS_AS(parse_pc("pc 2 C4\n2 0 1\n2 0 0\n"), InputError);
  CHECK(error_line([] { parse_pc("pc 2 C2xC2\n2 0 0\n2 0 0\n1 2 0 0\n"); }) == 4);
  CHECK(error_line([] { parse_pc("pc 2 X\n2 0 0\n2 0 7\n2 1 0 0\n"); }) == 3);
  CHECK_THROWS_AS(parse_group("foo 2 x\n"), InputError);
}

TEST_CASE("Comments and blank lines are skipped") {
  auto pc = parse_pc("# cyclic of order 4\npc 2 C4\n\n2 0 1\n2 0 0\n# relation\n2 1 0 0\n");
  CHECK(pc.label == "C4");
  CHECK(is_cyclic(build_from_pc(pc)));
}

TEST_CASE("Cayley round trip") {
  for (const auto& g : {quaternion(8), oracle::s3(), sl_2_3()}) {
    auto h = parse_cayley(write_cayley(g));
    CHECK(h.order() == g.order());
    CHECK(h.label() == g.label());
    CHECK(std::equal(h.product_table().begin(), h.product_table().end(),
                     g.product_table().begin()));
  }
}

TEST_CASE("pc round trip") {
  auto pc = example1_pc({3, {1, 2}});
  auto back = parse_pc(write_pc(pc));
  CHECK(back.label == pc.label);
  CHECK(back.primes == pc.primes);
  CHECK(back.powers == pc.powers);
  for (std::size_t j = 0; j < pc.rank(); ++j)
    for (std::size_t i = 0; i < j; ++i) CHECK(back.commutator(j, i) == pc.commutator(j, i));
}

TEST_CASE("Corpus listing sorts labels numerically") {
  auto entries = list_corpus(oracle::corpus_dir() / "order32");
  REQUIRE(entries.size() == 51);
  CHECK(entries[0].label == "32.1");
  CHECK(entries[8].label == "32.9");
  CHECK(entries[9].label == "32.10");
  CHECK(label_less("32.9", "32.10"));
  CHECK_FALSE(label_less("32.10", "32.9"));
  CHECK(label_less("243.2", "243.10"));
  CHECK_THROWS_AS(list_corpus(oracle::corpus_dir() / "missing"), InputError);
}

TEST_CASE("Loading a missing file fails cleanly") {
  CHECK_THROWS_AS(load_group(oracle::corpus_dir() / "nope.pc"), InputError);
}

TEST_CASE("Load respects the order cap") {
  CHECK_THROWS_AS(load_group(oracle::corpus_dir() / "named" / "64.258.pc", 32), CapExceeded);
  CHECK(load_group(oracle::corpus_dir() / "named" / "64.258.pc").order() == 64);
}
