#include "nested/cli/report.hpp"

#include <sstream>

namespace nested::cli {
namespace {

Json subgroup_json(const GroupTable& g, const Subgroup& h) {
  Json j;
  j["order"] = h.size();
  j["generators"] = subgroup_generators(g, h);
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string orders(const std::vector<Subgroup>& s, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? sep : "") + std::to_string(s[i].size());
  return out;
}

// 1^8 2^6 4
std::string degree_multiset(const std::vector<std::uint32_t>& ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size();) {
    std::size_t j = i;
    while (j < ds.size() && ds[j] == ds[i]) ++j;
    out += (out.empty() ? "" : " ") + std::to_string(ds[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

Json report_json(const ClassificationReport& r, const GroupTable& g, const std::optional<Timings>& t) {
  Json j;
  j["label"] = r.label;
  j["order"] = r.order;
  j["prime"] = optional_json(r.prime);
  j["nilpotency_class"] = optional_json(r.nilpotency_class);
  j["coclass"] = optional_json(r.coclass);
  j["exponent"] = r.exponent;
  j["class_count"] = r.class_count;
  j["degrees"] = r.degrees;
  j["cd"] = r.cd;
  j["is_abelian"] = r.is_abelian;
  j["is_nested"] = r.is_nested;
  j["is_nested_by_degrees"] = r.is_nested_by_degrees;
  j["is_strictly_nested_by_degrees"] = r.is_strictly_nested_by_degrees;
  j["is_gvz"] = r.is_gvz;
  j["is_vz"] = r.is_vz;
  j["is_semi_extraspecial"] = r.is_semi_extraspecial;
  j["is_ultraspecial"] = r.is_ultraspecial;
  j["kern_is_chain"] = r.kern_is_chain;
  j["nlkern_is_chain"] = r.nlkern_is_chain;
  j["normal_lattice_is_chain"] = r.normal_lattice_is_chain;
  j["unique_chief_series"] = r.unique_chief_series;
  if (r.chain) {
    Json c;
    c["terms"] = Json::array();
    c["commutators"] = Json::array();
    for (const auto& x : r.chain->terms.terms) c["terms"].push_back(subgroup_json(g, x));
    for (const auto& x : r.chain->commutators) c["commutators"].push_back(subgroup_json(g, x));
    j["chain_of_centers"] = std::move(c);
  } else {
    j["chain_of_centers"] = nullptr;
  }
  j["not_nested_witness"] =
      r.not_nested_witness ? Json::array({r.not_nested_witness->first, r.not_nested_witness->second})
                           : Json(nullptr);
  if (r.degree_centers) {
    Json d;
    d["degrees"] = r.degree_centers->degrees;
    d["centers"] = Json::array();
    for (const auto& y : r.degree_centers->y) d["centers"].push_back(subgroup_json(g, y));
    j["degree_centers"] = std::move(d);
  } else {
    j["degree_centers"] = nullptr;
  }
  if (t) {
    j["timings"] = {{"load_us", t->load_us}, {"analysis_us", t->analysis_us}};
  } else {
    j["timings"] = nullptr;
  }
  return j;
}

std::string report_text(const ClassificationReport& r, const GroupTable&, const std::optional<Timings>& t) {
  std::ostringstream os;
  auto line = [&](const char* key, const std::string& value) {
    os << "  " << key << std::string(28 - std::string(key).size(), ' ') << value << "\n";
  };
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << r.label << "\n";
  line("order", std::to_string(r.order));
  line("prime", opt(r.prime));
  line("nilpotency class", opt(r.nilpotency_class));
  line("coclass", opt(r.coclass));
  line("exponent", std::to_string(r.exponent));
  line("conjugacy classes", std::to_string(r.class_count));
  line("degrees", degree_multiset(r.degrees));
  std::string cd = "{";
  for (std::size_t i = 0; i < r.cd.size(); ++i) cd += (i ? "," : "") + std::to_string(r.cd[i]);
  line("cd", cd + "}");
  line("abelian", yes_no(r.is_abelian));
  line("nested", yes_no(r.is_nested));
  line("nested by degrees", yes_no(r.is_nested_by_degrees));
  line("strictly nested by degrees", yes_no(r.is_strictly_nested_by_degrees));
  line("GVZ", yes_no(r.is_gvz));
  line("VZ", yes_no(r.is_vz));
  line("semi-extraspecial", yes_no(r.is_semi_extraspecial));
  line("ultraspecial", yes_no(r.is_ultraspecial));
  line("Kern chain", yes_no(r.kern_is_chain));
  line("nlKern chain", yes_no(r.nlkern_is_chain));
  line("normal lattice chain", yes_no(r.normal_lattice_is_chain));
  line("unique chief series", yes_no(r.unique_chief_series));
  if (r.chain) {
    line("chain of centers", orders(r.chain->terms.terms, " > "));
    line("[X_i,G]", orders(r.chain->commutators, " > "));
  }
  if (r.not_nested_witness)
    line("incomparable centers", "chi_" + std::to_string(r.not_nested_witness->first) + ", chi_" +
                                     std::to_string(r.not_nested_witness->second));
  if (r.degree_centers) line("degree centers", orders(r.degree_centers->y, " >= "));
  if (t) line("time (us)", std::to_string(t->load_us) + " load, " + std::to_string(t->analysis_us) + " analysis");
  return os.str();
}

Json checks_json(const std::string& label, const std::vector<CheckResult>& results) {
  Json j;
  j["label"] = label;
  j["checks"] = Json::array();
  for (const auto& r : results) {
    Json c;
    c["id"] = r.id;
    c["verdict"] = std::string(to_string(r.verdict));
    c["detail"] = r.detail;
    j["checks"].push_back(std::move(c));
  }
  return j;
}

std::string checks_text(const std::string& label, const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : results) {
    ++counts[static_cast<int>(r.verdict)];
    os << label << "  " << r.id << std::string(26 - std::min<std::size_t>(25, r.id.size()), ' ')
       << to_string(r.verdict);
    if (r.verdict == Verdict::Fail && !r.detail.empty()) os << "  " << r.detail;
    os << "\n";
  }
  os << label << "  summary: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
     << " not-applicable\n";
  return os.str();
}

Json table1_json(const Table1Counts& t) {
  Json j;
  j["order"] = t.order;
  j["groups"] = t.groups;
  j["classes"] = t.classes();
  auto row = [&](const std::map<unsigned, std::size_t>& m) {
    Json a = Json::array();
    for (auto k : t.classes()) {
      auto it = m.find(k);
      a.push_back(it == m.end() ? 0 : it->second);
    }
    return a;
  };
  j["all"] = row(t.all);
  j["nested"] = row(t.nested);
  j["nested_by_degrees"] = row(t.nested_by_degrees);
  j["nested_gvz"] = row(t.nested_gvz);
  return j;
}

}  // namespace nested::cli
