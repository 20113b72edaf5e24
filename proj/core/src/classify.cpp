#include "nested/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nested {

GroupAnalysis::GroupAnalysis(GroupPtr g, std::size_t order_cap) : g_(std::move(g)), cap_(order_cap) {}

const CharacterTable& GroupAnalysis::table() {
  if (!table_) table_.emplace(compute_character_table(*g_, cap_));
  return *table_;
}

const NormalLattice& GroupAnalysis::lattice() {
  if (!lattice_) lattice_.emplace(NormalLattice::compute(*g_, cap_));
  return *lattice_;
}

const std::vector<Subgroup>& GroupAnalysis::kernels() {
  if (!kernels_) {
    const auto& t = table();
    kernels_.emplace();
    for (std::size_t i = 0; i < t.size(); ++i) kernels_->push_back(t.kernel(i));
  }
  return *kernels_;
}

const std::vector<Subgroup>& GroupAnalysis::centers() {
  if (!centers_) {
    const auto& t = table();
    centers_.emplace();
    for (std::size_t i = 0; i < t.size(); ++i) centers_->push_back(t.center(i));
  }
  return *centers_;
}

const Subgroup& GroupAnalysis::whole() {
  if (!whole_) whole_ = whole_group(*g_);
  return *whole_;
}
const Subgroup& GroupAnalysis::trivial() {
  if (!trivial_) trivial_ = trivial_subgroup(*g_);
  return *trivial_;
}
const Subgroup& GroupAnalysis::center() {
  if (!center_) center_ = nested::center(*g_);
  return *center_;
}
const Subgroup& GroupAnalysis::derived() {
  if (!derived_) derived_ = derived_subgroup(*g_);
  return *derived_;
}
const SubgroupSeries& GroupAnalysis::upper_central() {
  if (!upper_) upper_ = upper_central_series(*g_);
  return *upper_;
}
const SubgroupSeries& GroupAnalysis::lower_central() {
  if (!lower_) lower_ = lower_central_series(*g_);
  return *lower_;
}
bool GroupAnalysis::is_abelian() { return derived().size() == 1; }
bool GroupAnalysis::is_nilpotent() { return upper_central().terms.back().size() == order(); }
bool GroupAnalysis::is_solvable() {
  if (!solvable_) solvable_ = nested::is_solvable(*g_);
  return *solvable_;
}
std::optional<std::uint32_t> GroupAnalysis::prime() { return p_group_prime(*g_); }

std::vector<std::size_t> GroupAnalysis::characters_over(const Subgroup& n) {
  const auto& ks = kernels();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (n.is_subset_of(ks[i])) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> GroupAnalysis::quotient_degrees(const Subgroup& n) {
  std::vector<std::uint32_t> cd;
  for (auto i : characters_over(n)) cd.push_back(table().degree(i));
  std::sort(cd.begin(), cd.end());
  cd.erase(std::unique(cd.begin(), cd.end()), cd.end());
  return cd;
}

NestedVerdict chain_of_centers(GroupAnalysis& a) {
  const auto& zs = a.centers();
  NestedVerdict v;
  std::vector<Subgroup> distinct;
  std::vector<std::size_t> first;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    auto it = std::find(distinct.begin(), distinct.end(), zs[i]);
    if (it == distinct.end()) {
      distinct.push_back(zs[i]);
      first.push_back(i);
    }
  }
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j)
      if (!distinct[i].comparable_with(distinct[j])) {
        v.witness = std::make_pair(first[i], first[j]);
        return v;
      }
  std::sort(distinct.begin(), distinct.end(),
            [](const Subgroup& x, const Subgroup& y) { return x.size() > y.size(); });
  ChainOfCenters c{SubgroupSeries{std::move(distinct), SeriesKind::ChainOfCenters}, {}};
  for (const auto& x : c.terms.terms) c.commutators.push_back(a.bracket(x));
  v.nested = true;
  v.chain = std::move(c);
  return v;
}

std::optional<std::pair<std::size_t, std::size_t>> quotient_center_witness(GroupAnalysis& a) {
  const auto& lat = a.lattice();
  std::vector<Subgroup> zs;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    Subgroup z = a.quotient_center(lat[i]);
    if (std::find(zs.begin(), zs.end(), z) == zs.end()) {
      zs.push_back(std::move(z));
      origin.push_back(i);
    }
  }
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      if (!zs[i].comparable_with(zs[j])) return std::make_pair(origin[i], origin[j]);
  return std::nullopt;
}

DegreeVerdict nested_by_degrees(GroupAnalysis& a) {
  const auto& t = a.table();
  const auto& zs = a.centers();
  DegreeCenters dc;
  dc.degrees = t.degree_set();
  DegreeVerdict v;
  for (auto d : dc.degrees) {
    const Subgroup* y = nullptr;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.degree(i) != d) continue;
      if (!y) y = &zs[i];
      else if (!(*y == zs[i])) return v;
    }
    dc.y.push_back(*y);
  }
  v.strictly = true;
  for (std::size_t j = 1; j < dc.y.size(); ++j) {
    if (!dc.y[j].is_subset_of(dc.y[j - 1])) {
      v.strictly = false;
      return v;
    }
    if (dc.y[j] == dc.y[j - 1]) v.strictly = false;
  }
  v.nested_by_degrees = true;
  v.centers = std::move(dc);
  return v;
}

bool is_gvz(GroupAnalysis& a) {
  const auto& t = a.table();
  const auto& cls = t.classes();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t c = 0; c < cls.count(); ++c)
      if (!t.in_center(i, c) && !t.value_is_zero(i, c)) return false;
  return true;
}

bool is_vz(GroupAnalysis& a) { return quotient_is_vz(a, a.trivial()); }

bool quotient_is_vz(GroupAnalysis& a, const Subgroup& n) {
  const auto& t = a.table();
  const auto& cls = t.classes();
  const Subgroup z = a.quotient_center(n);
  for (auto i : a.characters_over(n)) {
    if (t.is_linear(i)) continue;
    for (std::size_t c = 0; c < cls.count(); ++c)
      if (!z.contains(cls.representatives[c]) && !t.value_is_zero(i, c)) return false;
  }
  return true;
}

bool is_camina_pair(GroupAnalysis& a, const Subgroup& n) {
  const auto& g = a.group();
  const auto& cls = a.table().classes();
  const auto members = n.elements();
  for (std::size_t c = 0; c < cls.count(); ++c) {
    const Element r = cls.representatives[c];
    if (n.contains(r)) continue;
    for (Element x : members)
      if (cls.class_of[g.mul(r, x)] != c) return false;
  }
  return true;
}

bool quotient_is_extraspecial(GroupAnalysis& a, const Subgroup& m) {
  const auto& g = a.group();
  const auto p = a.prime();
  if (!p) return false;
  const Subgroup z = a.quotient_center(m);
  if (z.size() != m.size() * *p) return false;
  const Subgroup dm = a.product(a.derived(), m);
  if (dm.size() != m.size() * *p) return false;
  return section_elementary_abelian_prime(g, a.whole(), z) == p;
}

bool quotient_is_semi_extraspecial(GroupAnalysis& a, const Subgroup& n) {
  const auto p = a.prime();
  if (!p) return false;
  const Subgroup z = a.quotient_center(n);
  if (z.size() == a.order()) return false;
  const auto& lat = a.lattice();
  bool any = false;
  for (auto i : lat.interval(n, z)) {
    if (lat[i].size() * *p != z.size()) continue;
    any = true;
    if (!quotient_is_extraspecial(a, lat[i])) return false;
  }
  return any;
}

bool quotient_is_ultraspecial(GroupAnalysis& a, const Subgroup& n) {
  if (!quotient_is_semi_extraspecial(a, n)) return false;
  const Subgroup z = a.quotient_center(n);
  const std::size_t zi = z.size() / n.size();
  return a.order() / z.size() == zi * zi;
}

bool is_semi_extraspecial(GroupAnalysis& a) { return quotient_is_semi_extraspecial(a, a.trivial()); }
bool is_ultraspecial(GroupAnalysis& a) { return quotient_is_ultraspecial(a, a.trivial()); }

bool is_frobenius_with_kernel(const GroupTable& g, const Subgroup& n) {
  const std::size_t k = n.size(), h = g.order() / n.size();
  if (k == 1 || h == 1 || std::gcd(k, h) != 1 || !is_normal(g, n)) return false;
  const auto members = n.elements();
  for (Element x = 0; x < g.order(); ++x) {
    if (n.contains(x)) continue;
    for (Element y : members)
      if (y != g.identity() && g.mul(x, y) == g.mul(y, x)) return false;
  }
  return true;
}

namespace {

bool pairwise_comparable(const std::vector<Subgroup>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!s[i].comparable_with(s[j])) return false;
  return true;
}

}  // namespace

KernelChains kernel_chain_predicates(GroupAnalysis& a) {
  const auto& t = a.table();
  const auto& ks = a.kernels();
  std::vector<Subgroup> all, nonlinear;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (std::find(all.begin(), all.end(), ks[i]) == all.end()) all.push_back(ks[i]);
    if (!t.is_linear(i) && std::find(nonlinear.begin(), nonlinear.end(), ks[i]) == nonlinear.end())
      nonlinear.push_back(ks[i]);
  }
  return {pairwise_comparable(all), pairwise_comparable(nonlinear)};
}

ClassificationReport classify(GroupAnalysis& a) {
  const auto& g = a.group();
  ClassificationReport r;
  r.label = g.label();
  r.order = g.order();
  r.prime = a.prime();
  r.nilpotency_class = nilpotency_class(g);
  r.coclass = coclass(g);
  r.exponent = exponent(g);
  const auto& t = a.table();
  r.class_count = t.size();
  r.degrees = t.degrees();
  std::sort(r.degrees.begin(), r.degrees.end());
  r.cd = t.degree_set();
  r.is_abelian = a.is_abelian();

  auto nv = chain_of_centers(a);
  r.is_nested = nv.nested;
  r.chain = std::move(nv.chain);
  r.not_nested_witness = nv.witness;
  auto dv = nested_by_degrees(a);
  r.is_nested_by_degrees = dv.nested_by_degrees;
  r.is_strictly_nested_by_degrees = dv.strictly;
  r.degree_centers = std::move(dv.centers);

  r.is_gvz = is_gvz(a);
  r.is_vz = is_vz(a);
  r.is_semi_extraspecial = is_semi_extraspecial(a);
  r.is_ultraspecial = r.is_semi_extraspecial && is_ultraspecial(a);
  auto kc = kernel_chain_predicates(a);
  r.kern_is_chain = kc.kern_is_chain;
  r.nlkern_is_chain = kc.nlkern_is_chain;
  const auto& lat = a.lattice();
  r.normal_lattice_is_chain = lat.is_chain();
  r.unique_chief_series = count_chief_series_capped(lat, 2) == 1;
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_divisors(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; std::size_t{p} * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

std::optional<unsigned> log_prime(std::size_t n, std::uint32_t p) {
  unsigned k = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

}  // namespace nested
