#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nested/cli/batch.hpp"
#include "nested/cli/report.hpp"
#include "nested/constructions.hpp"
#include "nested/error.hpp"
#include "nested/io.hpp"
#include "support.hpp"

using namespace nested;
using nested::cli::Json;

TEST_CASE("JSON report round-trips through text") {
  for (const auto& g : {dihedral(16), sl_2_3(), example3(3, 1),
                        direct_product(quaternion(8), extraspecial(3, 1, ExtraspecialVariant::Plus))}) {
    CAPTURE(g.label());
    auto r = classify(g);
    const auto j = cli::report_json(r, g);
    const auto back = Json::parse(j.dump());
    CHECK(back == j);
    CHECK(back["order"].get<std::size_t>() == g.order());
    CHECK(back["degrees"].get<std::vector<std::uint32_t>>() == r.degrees);
    CHECK(back["cd"].get<std::vector<std::uint32_t>>() == r.cd);
    CHECK(back["is_nested"].get<bool>() == r.is_nested);
    CHECK(back["is_gvz"].get<bool>() == r.is_gvz);
    CHECK(back["timings"].is_null());
    if (r.chain) {
      const auto& terms = back["chain_of_centers"]["terms"];
      REQUIRE(terms.size() == r.chain->terms.terms.size());
      for (std::size_t i = 0; i < terms.size(); ++i) {
        CHECK(terms[i]["order"].get<std::size_t>() == r.chain->terms.terms[i].size());
        // generators regenerate the recorded subgroup
        auto gens = terms[i]["generators"].get<std::vector<Element>>();
        CHECK(normal_closure(g, gens) == r.chain->terms.terms[i]);
      }
      CHECK(back["not_nested_witness"].is_null());
    } else {
      CHECK(back["chain_of_centers"].is_null());
      CHECK(back["not_nested_witness"].size() == 2);
    }
  }
}

TEST_CASE("Reports are deterministic with a fixed key order") {
  auto g = example1({2, {1, 2}});
  const auto a = cli::report_json(classify(g), g).dump();
  const auto b = cli::report_json(classify(g), g).dump();
  CHECK(a == b);
  CHECK(a.find("\"label\"") < a.find("\"order\""));
  CHECK(a.find("\"is_nested\"") < a.find("\"is_gvz\""));
  const auto t = cli::report_text(classify(g), g);
  CHECK(t.find(g.label()) != std::string::npos);
}

TEST_CASE("Check results serialize") {
  GroupAnalysis a(quaternion(8));
  auto res = run_theorem_suite(a, {"defn", "zero"});
  auto j = cli::checks_json("Q8", res);
  auto s = j.dump();
  CHECK(s.find("defn") != std::string::npos);
  CHECK(s.find("zero") != std::string::npos);
  auto txt = cli::checks_text("Q8", res);
  CHECK(txt.find("Q8") != std::string::npos);
}

TEST_CASE("Inputs expand in label order") {
  auto in = cli::expand_inputs({(oracle::corpus_dir() / "order32").string()});
  REQUIRE(in.size() == 51);
  CHECK(in[8].label == "32.9");
  CHECK(in[9].label == "32.10");
}

TEST_CASE("Ordered pool maps exceptions to exit codes") {
  std::vector<cli::Input> inputs = {{"a", "a"}, {"b", "b"}, {"c", "c"}};
  auto out = cli::run_ordered(inputs, 3, [](const cli::Input& in) -> cli::Outcome {
    if (in.label == "b") throw CapExceeded("op", 10, 5);
    if (in.label == "c") throw InputError("bad");
    return {in.label, {}, cli::ExitCode::kOk};
  });
  REQUIRE(out.size() == 3);
  CHECK(out[0].output == "a");
  CHECK(out[1].code == cli::ExitCode::kCapExceeded);
  CHECK(out[2].code == cli::ExitCode::kInputError);
}
