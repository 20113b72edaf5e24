// nestgrp: classify groups, run the theorem checks, reproduce the class
// counts table, and export the example constructions.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nested/classify.hpp"
#include "nested/cli/batch.hpp"
#include "nested/cli/report.hpp"
#include "nested/constructions.hpp"
#include "nested/error.hpp"
#include "nested/io.hpp"
#include "nested/verify.hpp"

using namespace nested;
using namespace nested::cli;

namespace {

struct Options {
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t jobs = 1;
  std::string format = "text";
  bool timings = false;
};

std::int64_t micros_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> ids;
  std::stringstream ss(s);
  for (std::string id; std::getline(ss, id, ',');)
    if (!id.empty()) ids.push_back(id);
  return ids;
}

int finish(const std::vector<Outcome>& outcomes, const Options& opt) {
  int code = kOk;
  if (opt.format == "json") {
    Json all = Json::array();
    for (const auto& o : outcomes)
      if (o.code != kInputError && o.code != kCapExceeded) all.push_back(Json::parse(o.output));
    std::cout << all.dump(2) << "\n";
  }
  for (const auto& o : outcomes) {
    if (opt.format != "json") std::cout << o.output;
    if (!o.error.empty()) std::cerr << "nestgrp: " << o.error << "\n";
    code = std::max(code, o.code);
  }
  return code;
}

int run_classify(const std::vector<std::string>& paths, const Options& opt) {
  auto inputs = expand_inputs(paths);
  auto outcomes = run_ordered(inputs, opt.jobs, [&](const Input& in) {
    const auto t0 = std::chrono::steady_clock::now();
    GroupAnalysis a(load_group(in.path, std::min(opt.order_cap, kMaxTableOrder)), opt.order_cap);
    const auto load = micros_since(t0);
    const auto t1 = std::chrono::steady_clock::now();
    auto r = classify(a);
    std::optional<Timings> t;
    if (opt.timings) t = Timings{load, micros_since(t1)};
    Outcome o;
    o.output = opt.format == "json" ? report_json(r, a.group(), t).dump() : report_text(r, a.group(), t);
    return o;
  });
  return finish(outcomes, opt);
}

int run_verify(const std::vector<std::string>& paths, const std::string& checks, const Options& opt) {
  std::vector<std::string> ids;
  if (checks != "all") ids = split_ids(checks);
  for (const auto& id : ids)
    if (std::none_of(theorem_checks().begin(), theorem_checks().end(),
                     [&](const CheckInfo& c) { return c.id == id; }))
      throw InputError("unknown check id '" + id + "'");
  auto inputs = expand_inputs(paths);
  auto outcomes = run_ordered(inputs, opt.jobs, [&](const Input& in) {
    GroupAnalysis a(load_group(in.path, std::min(opt.order_cap, kMaxTableOrder)), opt.order_cap);
    auto results = run_theorem_suite(a, ids);
    Outcome o;
    o.output = opt.format == "json" ? checks_json(a.group().label(), results).dump()
                                    : checks_text(a.group().label(), results);
    if (std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.verdict == Verdict::Fail; }))
      o.code = kVerifyFailed;
    return o;
  });
  return finish(outcomes, opt);
}

int run_table1(const std::string& dir, const Options& opt) {
  auto inputs = expand_inputs({dir});
  std::vector<ClassificationReport> reports(inputs.size());
  auto outcomes = run_ordered(inputs, opt.jobs, [&](const Input& in) {
    GroupAnalysis a(load_group(in.path, std::min(opt.order_cap, kMaxTableOrder)), opt.order_cap);
    const std::size_t i = &in - inputs.data();
    reports[i] = classify(a);
    return Outcome{};
  });
  int code = kOk;
  Table1Counts t;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!outcomes[i].error.empty()) std::cerr << "nestgrp: " << outcomes[i].error << "\n";
    code = std::max(code, outcomes[i].code);
    if (outcomes[i].code == kOk) t.add(reports[i]);
  }
  if (opt.format == "json") std::cout << table1_json(t).dump(2) << "\n";
  else std::cout << render_table1(t);
  return code;
}

struct ConstructArgs {
  std::string family;
  std::uint32_t p = 2, q = 0, r = 0;
  std::vector<std::uint32_t> n, m;
  std::string variant = "plus";
  std::string output;
  std::string emit;
};

std::uint32_t single(const std::vector<std::uint32_t>& v, const char* name) {
  if (v.size() != 1) throw InputError(std::string("--") + name + " takes one value for this family");
  return v[0];
}

int run_construct(const ConstructArgs& a, const Options& opt) {
  std::optional<PcPresentation> pc;
  GroupTable g;
  if (a.family == "example1") {
    Example1Spec s{a.p, a.n};
    pc = example1_pc(s);
    g = example1(s, opt.order_cap);
  } else if (a.family == "example3") {
    g = example3(a.p, single(a.n, "n"), opt.order_cap);
  } else if (a.family == "example4") {
    Example4Spec s{a.p, a.m, {}};
    pc = example4_pc(s);
    g = example4(s, opt.order_cap);
  } else if (a.family == "extraspecial") {
    const auto v = a.variant == "minus" ? ExtraspecialVariant::Minus : ExtraspecialVariant::Plus;
    const std::uint32_t n = a.n.empty() ? 1 : single(a.n, "n");
    pc = extraspecial_pc(a.p, n, v);
    g = extraspecial(a.p, n, v, opt.order_cap);
  } else if (a.family == "heisenberg") {
    const std::uint32_t m = a.m.empty() ? 1 : single(a.m, "m");
    pc = heisenberg_pc(a.p, m);
    g = heisenberg(a.p, m, opt.order_cap);
  } else if (a.family == "frobenius") {
    g = frobenius_pqr(a.p, a.q, a.r);
  } else {
    g = sl_2_3();
  }
  std::string emit = a.emit;
  if (emit.empty()) emit = a.output.size() > 7 && a.output.ends_with(".cayley") ? "cayley" : "pc";
  std::string text;
  if (emit == "cayley") {
    text = write_cayley(g);
  } else {
    if (!pc) {
      pc = pc_from_group(g);
      pc->label = g.label();
    }
    text = write_pc(*pc);
  }
  if (a.output.empty() || a.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(a.output);
    if (!(out << text)) throw InputError("cannot write '" + a.output + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables and nested-group classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  bool seedless = false;
  app.add_option("--order-cap", opt.order_cap, "Largest group order analysed")->check(CLI::PositiveNumber);
  app.add_option("-j,--jobs", opt.jobs, "Worker threads over corpus entries")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--seedless", seedless, "Reserved; rejected because no randomness exists");
  app.add_flag("--timings", opt.timings, "Include per-group timings in classify reports");

  std::vector<std::string> paths;
  auto* classify_cmd = app.add_subcommand("classify", "Classification report per group");
  classify_cmd->add_option("paths", paths, "Group files or corpus directories")->required();

  std::string checks = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks");
  verify_cmd->add_option("paths", paths, "Group files or corpus directories")->required();
  verify_cmd->add_option("--checks", checks, "all, or a comma-separated list of check ids");
  verify_cmd->add_flag_callback("--list-checks", [] {
    for (const auto& c : theorem_checks()) std::cout << c.id << "  " << c.summary << "\n";
    std::exit(kOk);
  }, "Print the check ids and exit");

  std::string dir;
  auto* table1_cmd = app.add_subcommand("table1", "Counts by nilpotency class for one corpus");
  table1_cmd->add_option("dir", dir, "Corpus directory")->required()->check(CLI::ExistingDirectory);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Build an example group and write it");
  construct_cmd->add_option("family", ca.family)
      ->required()
      ->check(CLI::IsMember({"example1", "example3", "example4", "extraspecial", "heisenberg", "frobenius", "sl23"}));
  construct_cmd->add_option("--p", ca.p, "Prime");
  construct_cmd->add_option("--q", ca.q, "Second prime (frobenius)");
  construct_cmd->add_option("--r", ca.r, "Third prime (frobenius)");
  construct_cmd->add_option("--n", ca.n, "Exponents (example1), n (example3), rank (extraspecial)")->delimiter(',');
  construct_cmd->add_option("--m", ca.m, "Level sizes (example4), field degree (heisenberg)")->delimiter(',');
  construct_cmd->add_option("--variant", ca.variant, "Extraspecial variant")->check(CLI::IsMember({"plus", "minus"}));
  construct_cmd->add_option("-o,--output", ca.output, "Output file, '-' for stdout");
  construct_cmd->add_option("--emit", ca.emit, "Output format")->check(CLI::IsMember({"cayley", "pc"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  if (seedless) {
    std::cerr << "nestgrp: --seedless is reserved; every computation here is deterministic\n";
    return kInputError;
  }
  try {
    if (*classify_cmd) return run_classify(paths, opt);
    if (*verify_cmd) return run_verify(paths, checks, opt);
    if (*table1_cmd) return run_table1(dir, opt);
    return run_construct(ca, opt);
  } catch (const CapExceeded& e) {
    std::cerr << "nestgrp: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "nestgrp: " << e.what() << "\n";
    return kInputError;
  }
}
