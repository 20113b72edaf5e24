#include "nested/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "nested/error.hpp"

namespace nested {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

CheckResult pass() { return {{}, Verdict::Pass, {}}; }
CheckResult fail(std::string why) { return {{}, Verdict::Fail, std::move(why)}; }
CheckResult na(std::string why) { return {{}, Verdict::NotApplicable, std::move(why)}; }

bool is_prime_power(std::size_t n) { return n == 1 || prime_divisors(n).size() == 1; }

class Ctx {
 public:
  explicit Ctx(GroupAnalysis& a)
      : a(a), g(a.group()), nv(chain_of_centers(a)), dv(nested_by_degrees(a)),
        kc(kernel_chain_predicates(a)) {}

  GroupAnalysis& a;
  const GroupTable& g;
  NestedVerdict nv;
  DegreeVerdict dv;
  KernelChains kc;

  bool nested() const { return nv.nested; }
  bool nbd() const { return dv.nested_by_degrees; }
  std::size_t n() const { return nv.chain->nested_length(); }
  const Subgroup& X(std::size_t i) const { return (*nv.chain)[i]; }
  const Subgroup& B(std::size_t i) const { return nv.chain->commutators[i]; }
  std::size_t r() const { return dv.centers->degrees.size() - 1; }
  std::uint32_t d(std::size_t j) const { return dv.centers->degrees[j]; }
  const Subgroup& Y(std::size_t j) const { return dv.centers->y[j]; }

  const NormalLattice& lattice() { return a.lattice(); }
  const CharacterTable& table() { return a.table(); }
  const Subgroup& D() { return a.derived(); }

  const Subgroup& zn(std::size_t idx) {
    if (zn_.empty()) zn_.resize(lattice().size());
    if (!zn_[idx]) zn_[idx] = a.quotient_center(lattice()[idx]);
    return *zn_[idx];
  }

  std::string sg(const Subgroup& h) const {
    std::ostringstream os;
    os << "<order " << h.size() << ":";
    for (Element x : subgroup_generators(g, h)) os << " " << x;
    os << ">";
    return os.str();
  }

  std::size_t index(const Subgroup& h) {
    auto i = lattice().index_of(h);
    if (!i) throw InternalError("subgroup expected in the normal lattice");
    return *i;
  }

  /// Degrees of chi with lower <= ker chi and upper not in ker chi.
  std::set<std::uint32_t> relative_degrees(const Subgroup& lower, const Subgroup& upper) {
    std::set<std::uint32_t> out;
    const auto& ks = a.kernels();
    for (std::size_t i = 0; i < ks.size(); ++i)
      if (lower.is_subset_of(ks[i]) && !upper.is_subset_of(ks[i])) out.insert(table().degree(i));
    return out;
  }

 private:
  std::vector<std::optional<Subgroup>> zn_;
};

std::string set_str(const std::set<std::uint32_t>& s) {
  std::string out = "{";
  for (auto d : s) out += (out.size() > 1 ? "," : "") + std::to_string(d);
  return out + "}";
}

// ---- general ------------------------------------------------------------

CheckResult table_soundness(Ctx& c) {
  auto v = verify_table(c.table(), c.g);
  if (!v.empty()) return fail(v.front());
  Subgroup ks = c.a.whole(), zs = c.a.whole();
  for (std::size_t i = 0; i < c.table().size(); ++i) {
    ks = intersection(ks, c.a.kernels()[i]);
    zs = intersection(zs, c.a.centers()[i]);
  }
  if (ks.size() != 1) return fail("kernels intersect in " + c.sg(ks));
  if (!(zs == c.a.center())) return fail("centers intersect in " + c.sg(zs) + ", not Z(G)");
  for (std::size_t i = 0; i < c.table().size(); ++i)
    if (!(c.a.quotient_center(c.a.kernels()[i]) == c.a.centers()[i]))
      return fail("chi_" + std::to_string(i) + ": Z(chi)/ker chi differs from Z(G/ker chi)");
  return pass();
}

CheckResult main1(Ctx& c) {
  const bool k = c.kc.kern_is_chain, l = c.lattice().is_chain(),
             u = count_chief_series_capped(c.lattice(), 2) == 1;
  if (k == l && l == u) return pass();
  return fail("kern chain " + std::to_string(k) + ", lattice chain " + std::to_string(l) +
              ", unique chief series " + std::to_string(u));
}

CheckResult main2_full(Ctx& c) {
  if (c.a.is_abelian()) return na("abelian");
  const auto& lat = c.lattice();
  const std::size_t di = c.index(c.D());
  bool cond2a = true, cond3 = true;
  std::size_t chief_count = 0;
  bool chief_ok = true;
  for (std::size_t m = 0; m < lat.size(); ++m) {
    if (!lat[m].is_proper_subset_of(c.D())) continue;
    const auto cov = lat.covers(m);
    const bool chief = std::find(cov.begin(), cov.end(), di) != cov.end();
    if (chief) {
      ++chief_count;
      if (cov.size() > 2) chief_ok = false;
      if (cov.size() > 2) cond3 = false;
    } else if (cov.size() != 1) {
      cond3 = false;
    }
    if (!is_waist(lat, lat[m])) cond2a = false;
  }
  const bool cond1 = c.kc.nlkern_is_chain;
  const bool cond2 = cond2a && chief_count == 1 && chief_ok;
  if (cond1 == cond2 && cond2 == cond3) return pass();
  return fail("nlKern chain " + std::to_string(cond1) + ", waist condition " + std::to_string(cond2) +
              ", quotient condition " + std::to_string(cond3));
}

CheckResult main3_equivalence(Ctx& c) {
  auto qw = quotient_center_witness(c.a);
  if (c.nested() != !qw) {
    if (qw)
      return fail("character centers form a chain but Z_N for " + c.sg(c.lattice()[qw->first]) +
                  " and " + c.sg(c.lattice()[qw->second]) + " are incomparable");
    return fail("quotient centers form a chain but Z(chi_" + std::to_string(c.nv.witness->first) +
                "), Z(chi_" + std::to_string(c.nv.witness->second) + ") are incomparable");
  }
  if (!c.nested()) return pass();
  std::vector<Subgroup> seen;
  for (std::size_t i = 0; i < c.lattice().size(); ++i) {
    const auto& z = c.zn(i);
    const auto& t = c.nv.chain->terms.terms;
    if (std::find(t.begin(), t.end(), z) == t.end())
      return fail("Z_N for N = " + c.sg(c.lattice()[i]) + " is not in the chain of centers");
    if (std::find(seen.begin(), seen.end(), z) == seen.end()) seen.push_back(z);
  }
  if (seen.size() != c.n() + 1) return fail("some chain term is not a quotient center");
  return pass();
}

CheckResult defn(Ctx& c) {
  if (!c.nested()) return na("not nested");
  if (!(c.X(0) == c.a.whole())) return fail("X_0 is not G");
  for (std::size_t i = 1; i <= c.n(); ++i)
    if (!c.X(i).is_proper_subset_of(c.X(i - 1))) return fail("chain not strictly descending at " + std::to_string(i));
  const auto& t = c.nv.chain->terms.terms;
  for (const auto& z : c.a.centers())
    if (std::find(t.begin(), t.end(), z) == t.end()) return fail("center " + c.sg(z) + " missing from chain");
  for (const auto& x : t)
    if (std::find(c.a.centers().begin(), c.a.centers().end(), x) == c.a.centers().end())
      return fail("chain term " + c.sg(x) + " is no character center");
  return pass();
}

CheckResult zero(Ctx& c) {
  if (!c.nested()) return na("not nested");
  if (c.X(c.n()) == c.a.center()) return pass();
  return fail("X_n = " + c.sg(c.X(c.n())) + " but Z(G) = " + c.sg(c.a.center()));
}

CheckResult twoa(Ctx& c) {
  if (!c.nested()) return na("not nested");
  for (std::size_t k = 0; k < c.table().size(); ++k)
    for (std::size_t i = 0; i <= c.n(); ++i)
      if (c.a.centers()[k] == c.X(i) && !c.B(i).is_subset_of(c.a.kernels()[k]))
        return fail("chi_" + std::to_string(k) + ": [X_" + std::to_string(i) + ",G] not in kernel");
  return pass();
}

CheckResult threea(Ctx& c) {
  if (!c.nested()) return na("not nested");
  for (std::size_t i = 0; i <= c.n(); ++i)
    if (!(c.a.quotient_center(c.B(i)) == c.X(i)))
      return fail("Z(G/[X_" + std::to_string(i) + ",G]) differs from X_" + std::to_string(i) + "/[X_i,G]");
  return pass();
}

CheckResult threec(Ctx& c) {
  if (!c.nested()) return na("not nested");
  for (std::size_t i = 1; i <= c.n(); ++i)
    if (!c.B(i).is_proper_subset_of(c.B(i - 1)))
      return fail("[X_" + std::to_string(i) + ",G] not properly inside [X_" + std::to_string(i - 1) + ",G]");
  return pass();
}

CheckResult threeb(Ctx& c) {
  if (!c.nested()) return na("not nested");
  for (std::size_t k = 0; k < c.table().size(); ++k) {
    const auto& ker = c.a.kernels()[k];
    for (std::size_t i = 0; i <= c.n(); ++i) {
      const bool lhs = c.a.centers()[k] == c.X(i);
      const bool rhs = c.B(i).is_subset_of(ker) && (i == 0 || !c.B(i - 1).is_subset_of(ker));
      if (lhs != rhs) return fail("chi_" + std::to_string(k) + ", i = " + std::to_string(i));
    }
  }
  return pass();
}

CheckResult ten(Ctx& c) {
  if (!c.nested()) return na("not nested");
  const auto& lat = c.lattice();
  for (std::size_t m = 0; m < lat.size(); ++m) {
    const auto& nn = lat[m];
    const auto over = c.a.characters_over(nn);
    for (std::size_t i = 1; i <= c.n(); ++i) {
      const bool lhs = std::any_of(over.begin(), over.end(),
                                   [&](std::size_t k) { return c.a.centers()[k] == c.X(i); });
      const bool rhs = c.a.product(nn, c.B(i)).size() < c.a.product(nn, c.B(i - 1)).size();
      if (lhs != rhs) return fail("N = " + c.sg(nn) + ", i = " + std::to_string(i));
    }
  }
  return pass();
}

CheckResult sixa(Ctx& c) {
  if (!c.nested()) return na("not nested");
  const auto& lat = c.lattice();
  for (std::size_t m = 0; m < lat.size(); ++m)
    for (std::size_t i = 0; i <= c.n(); ++i) {
      if (!c.B(i).is_subset_of(lat[m])) continue;
      if (i > 0 && c.B(i - 1).is_subset_of(lat[m])) continue;
      if (!(c.zn(m) == c.X(i))) return fail("N = " + c.sg(lat[m]) + ": Z_N differs from X_" + std::to_string(i));
    }
  return pass();
}

CheckResult sixb(Ctx& c) {
  if (!c.nested()) return na("not nested");
  const auto& lat = c.lattice();
  for (std::size_t m = 0; m < lat.size(); ++m)
    for (std::size_t i = 1; i <= c.n(); ++i)
      if (!c.B(i - 1).is_subset_of(lat[m]) && !lat[m].is_subset_of(c.X(i)))
        return fail("N = " + c.sg(lat[m]) + ", i = " + std::to_string(i));
  return pass();
}

bool unique_minimal_over(Ctx& c, std::size_t i) {
  const auto cov = c.lattice().covers(c.index(c.X(i)));
  return cov.size() == 1 && c.lattice()[cov[0]] == c.a.product(c.B(i - 1), c.X(i));
}

CheckResult sixc(Ctx& c) {
  if (!c.nested()) return na("not nested");
  for (std::size_t i = 1; i <= c.n(); ++i)
    if (!c.B(i - 1).is_subset_of(c.X(i)) && !unique_minimal_over(c, i))
      return fail("i = " + std::to_string(i) + ": no unique minimal normal subgroup over X_i");
  return pass();
}

CheckResult sixd(Ctx& c) {
  if (!c.nested()) return na("not nested");
  bool all = true;
  for (std::size_t i = 1; i <= c.n(); ++i)
    if (!c.B(i - 1).is_subset_of(c.X(i))) all = false;
  if (all == c.a.is_nilpotent()) return pass();
  return fail(std::string("nilpotent ") + (all ? "false" : "true") + " but chain condition " + (all ? "true" : "false"));
}

CheckResult perfect_step(Ctx& c) {
  if (!c.nested()) return na("not nested");
  for (std::size_t i = 1; i <= c.n(); ++i)
    if (!c.B(i - 1).is_subset_of(c.X(i)) && !(c.a.bracket(c.B(i - 1)) == c.B(i - 1)))
      return fail("[X_" + std::to_string(i - 1) + ",G,G] is smaller than [X_" + std::to_string(i - 1) + ",G]");
  return pass();
}

bool same_elementary_prime(Ctx& c, const Subgroup& u1, const Subgroup& l1, const Subgroup& u2,
                           const Subgroup& l2) {
  auto p1 = section_elementary_abelian_prime(c.g, u1, l1);
  auto p2 = section_elementary_abelian_prime(c.g, u2, l2);
  return p1 && p2 && *p1 == *p2;
}

CheckResult nine(Ctx& c) {
  if (!c.nested()) return na("not nested");
  for (std::size_t i = 1; i <= c.n(); ++i)
    if (c.B(i - 1).is_subset_of(c.X(i)) && !same_elementary_prime(c, c.X(i - 1), c.X(i), c.B(i - 1), c.B(i)))
      return fail("i = " + std::to_string(i));
  return pass();
}

CheckResult nine2(Ctx& c) {
  if (!c.nested()) return na("not nested");
  for (std::size_t i = 1; i <= c.n(); ++i)
    for (std::size_t j = i; j <= c.n(); ++j)
      if (c.B(i - 1).is_subset_of(c.X(j)) &&
          !same_elementary_prime(c, c.X(i - 1), c.X(j), c.B(i - 1), c.B(j)))
        return fail("i = " + std::to_string(i) + ", j = " + std::to_string(j));
  return pass();
}

CheckResult nine1(Ctx& c) {
  if (!c.nested()) return na("not nested");
  for (std::size_t j = 1; j <= c.n(); ++j)
    for (std::size_t k = j; k <= c.n() && c.B(k - 1).is_subset_of(c.X(k)); ++k) {
      auto p1 = section_p_group_prime(c.X(j - 1), c.X(k));
      auto p2 = section_p_group_prime(c.B(j - 1), c.B(k));
      if (!p1 || !p2 || *p1 != *p2) return fail("j = " + std::to_string(j) + ", k = " + std::to_string(k));
    }
  return pass();
}

CheckResult main4(Ctx& c) {
  if (!c.nested()) return na("not nested");
  for (std::size_t i = 1; i <= c.n(); ++i) {
    const bool a = c.B(i - 1).is_subset_of(c.X(i)) &&
                   same_elementary_prime(c, c.X(i - 1), c.X(i), c.B(i - 1), c.B(i));
    if (!a && !unique_minimal_over(c, i)) return fail("i = " + std::to_string(i) + " meets neither alternative");
  }
  return pass();
}

// Factors of a series must be elementary abelian (or trivial) for one prime.
bool factors_share_prime(const GroupTable& g, const std::vector<std::pair<Subgroup, Subgroup>>& sections,
                         std::optional<std::uint32_t>& p) {
  for (const auto& [u, l] : sections) {
    if (u.size() == l.size()) continue;
    auto q = section_elementary_abelian_prime(g, u, l);
    if (!q || (p && *p != *q)) return false;
    p = q;
  }
  return true;
}

CheckResult nine3(Ctx& c) {
  if (!c.nested()) return na("not nested");
  const auto& z = c.a.upper_central().terms;
  std::optional<std::uint32_t> p = section_p_group_prime(z.back(), z.front());
  if (z.back().size() != z.front().size() && !p) return fail("Z_inf/Z_1 is not a p-group");
  std::vector<std::pair<Subgroup, Subgroup>> secs;
  Subgroup prev_b = c.a.trivial();
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    secs.emplace_back(z[i + 1], z[i]);
    Subgroup b = c.a.bracket(z[i + 1]);
    secs.emplace_back(b, i == 0 ? c.a.trivial() : c.a.bracket(z[i]));
  }
  if (!factors_share_prime(c.g, secs, p)) return fail("upper central factors not elementary abelian for one prime");
  return pass();
}

CheckResult nine4(Ctx& c) {
  if (!c.nested()) return na("not nested");
  const auto& gam = c.a.lower_central().terms;
  if (gam.size() < 2) return pass();
  std::optional<std::uint32_t> p = section_p_group_prime(gam[1], gam.back());
  if (gam[1].size() != gam.back().size() && !p) return fail("G'/G_inf is not a p-group");
  std::vector<std::pair<Subgroup, Subgroup>> secs;
  for (std::size_t i = 1; i + 1 < gam.size(); ++i) secs.emplace_back(gam[i], gam[i + 1]);
  if (!factors_share_prime(c.g, secs, p)) return fail("lower central factors not elementary abelian for one prime");
  return pass();
}

CheckResult nine5(Ctx& c) {
  if (!c.nested() || !c.a.is_nilpotent()) return na("not nested and nilpotent");
  const std::size_t idx = c.a.order() / c.a.center().size();
  if (!is_prime_power(idx)) return fail("|G:Z(G)| = " + std::to_string(idx) + " is not a prime power");
  if (idx == 1) return pass();
  const std::uint32_t p = prime_divisors(idx)[0];
  Subgroup a(c.a.order());
  for (Element x = 0; x < c.a.order(); ++x)
    if (c.g.element_order(x) % p != 0) a.insert(x);
  if (!section_is_abelian(c.g, a, c.a.trivial())) return fail("Hall p'-subgroup not abelian");
  auto q = quotient(c.a.group_ptr(), a);
  GroupAnalysis qa(q.target, c.a.order_cap());
  if (!qa.prime() && qa.order() != 1) return fail("G/A is not a p-group");
  if (!is_nested_via_quotient_centers(qa)) return fail("Sylow p-subgroup is not nested");
  return pass();
}

CheckResult frobenius_quotient(Ctx& c) {
  if (!c.nested() || c.n() == 0) return na("not nested or abelian");
  auto q = quotient(c.a.group_ptr(), c.X(1));
  const auto& h = *q.target;
  if (!is_solvable(h) || is_nilpotent(h)) return na("G/X_1 nilpotent or not solvable");
  if (is_frobenius_with_kernel(h, derived_subgroup(h))) return pass();
  return fail("G/X_1 is not Frobenius with kernel (G/X_1)'");
}

// ---- kernel chains ------------------------------------------------------

CheckResult knone(Ctx& c) {
  if (!c.kc.kern_is_chain) return na("Kern not a chain");
  if (section_is_cyclic(c.g, c.a.whole(), c.D())) return pass();
  return fail("G/G' is not cyclic");
}

CheckResult kntwo(Ctx& c) {
  if (!c.kc.kern_is_chain || !c.a.is_nilpotent()) return na("not nilpotent with Kern a chain");
  if (is_cyclic(c.g) && is_prime_power(c.a.order())) return pass();
  return fail("G is not a cyclic p-group");
}

CheckResult knthree(Ctx& c) {
  const auto& ks = c.a.kernels();
  const auto& zs = c.a.centers();
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < ks.size(); ++j)
      if (ks[j].is_subset_of(ks[i]) && !zs[j].is_subset_of(zs[i]))
        return fail("ker chi_" + std::to_string(j) + " <= ker chi_" + std::to_string(i) + " but centers are not");
  return pass();
}

CheckResult knfour(Ctx& c) {
  if (!c.kc.nlkern_is_chain) return na("nlKern not a chain");
  return c.nested() ? pass() : fail("nlKern is a chain but G is not nested");
}

CheckResult knfoura(Ctx& c) {
  if (!c.kc.nlkern_is_chain || c.a.is_abelian()) return na("abelian or nlKern not a chain");
  const auto& lat = c.lattice();
  for (std::size_t m = 0; m < lat.size(); ++m)
    if (lat[m].is_proper_subset_of(c.D()) && !is_waist(lat, lat[m]))
      return fail("M = " + c.sg(lat[m]) + " is not a waist");
  return pass();
}

CheckResult knfive(Ctx& c) {
  if (!c.kc.nlkern_is_chain || c.a.is_abelian()) return na("abelian or nlKern not a chain");
  if (!c.nested()) return fail("not nested");
  for (std::size_t i = 1; i <= c.n(); ++i) {
    const Subgroup w = intersection(c.X(i), c.D());
    if (!section_is_cyclic(c.g, w, c.B(i)) || !is_prime_power(w.size() / c.B(i).size()))
      return fail("W_" + std::to_string(i) + "/[X_i,G] not cyclic of prime power order");
  }
  return pass();
}

CheckResult knfive1(Ctx& c) {
  if (!c.kc.nlkern_is_chain || c.a.is_abelian()) return na("abelian or nlKern not a chain");
  if (!c.nested() || c.n() == 0) return fail("not nested");
  const Subgroup& d = c.D();
  // The two alternatives cover G' < X_1 and G' not in X_1; G' = X_1 (for
  // instance any extraspecial group) satisfies neither.
  if (d == c.X(1)) return na("G' = X_1, outside both alternatives");
  const Subgroup d2 = c.a.bracket(d);
  const std::size_t di = d.size() / d2.size();
  const std::size_t xi = c.X(1).size() / d2.size();
  const bool one = d.is_proper_subset_of(c.X(1)) && d2 == c.B(1) &&
                   (c.n() < 2 || c.X(2).is_proper_subset_of(c.B(1))) && is_prime(di) &&
                   section_is_cyclic(c.g, c.X(1), d2) && prime_divisors(xi).size() <= 2;
  const Subgroup w = intersection(c.X(1), d);
  bool two = false;
  if (w.is_proper_subset_of(d)) {
    const auto cov = c.lattice().covers(c.index(w));
    two = std::find(cov.begin(), cov.end(), c.index(d)) != cov.end() &&
          section_is_cyclic(c.g, c.X(1), w) && is_prime_power(c.X(1).size() / w.size());
  }
  if (one || two) return pass();
  return fail("neither alternative holds");
}

CheckResult qian_wang(Ctx& c) {
  auto p = c.a.prime();
  if (!p || c.a.is_abelian()) return na("not a nonabelian p-group");
  const bool rhs = is_maximal_class(c.g).value_or(false) ||
                   (c.D().size() == *p && section_is_cyclic(c.g, c.a.center(), c.a.trivial()));
  if (rhs == c.kc.nlkern_is_chain) return pass();
  return fail("nlKern chain " + std::to_string(c.kc.nlkern_is_chain) + ", structural side " + std::to_string(rhs));
}

// ---- nested by degrees --------------------------------------------------

CheckResult degree_centers(Ctx& c) {
  if (!c.nbd()) return na("not nested by degrees");
  if (!c.nested()) return fail("nested by degrees but not nested");
  const std::size_t r = c.r(), n = c.n();
  if (r < n) return fail("r < n");
  for (std::size_t i = 1; i <= n; ++i)
    if (!c.X(i).is_subset_of(c.Y(i))) return fail("X_" + std::to_string(i) + " not inside Y_i");
  for (std::size_t j = 0; j <= r; ++j) {
    bool found = false;
    for (std::size_t i = 0; i <= std::min(j, n); ++i) found = found || c.Y(j) == c.X(i);
    if (!found) return fail("Y_" + std::to_string(j) + " is no X_i with i <= j");
  }
  if (r >= 1 && (!(c.Y(1) == c.X(1)) || !c.X(1).is_proper_subset_of(c.a.whole())))
    return fail("Y_1 differs from X_1");
  for (std::size_t j = 1; j < r; ++j) {
    const bool lhs = c.Y(j + 1).is_proper_subset_of(c.Y(j));
    const bool rhs = c.a.bracket(c.Y(j + 1)).is_proper_subset_of(c.a.bracket(c.Y(j)));
    if (lhs != rhs) return fail("j = " + std::to_string(j));
  }
  return pass();
}

CheckResult seven(Ctx& c) {
  if (!c.nbd()) return na("not nested by degrees");
  const std::size_t r = c.r();
  const auto& t = c.table();
  for (std::size_t i = 0; i <= r; ++i)
    for (std::size_t j = i + 1; j <= r; ++j) {
      if (!c.Y(j).is_proper_subset_of(c.Y(i))) continue;
      const Subgroup b = c.a.bracket(c.Y(i));
      for (std::size_t k = 0; k < t.size(); ++k)
        if (t.degree(k) == c.d(j) && b.is_subset_of(c.a.kernels()[k]))
          return fail("(1) i = " + std::to_string(i) + ", j = " + std::to_string(j));
    }
  for (std::size_t i = 0; i < r; ++i) {
    if (!c.Y(i + 1).is_proper_subset_of(c.Y(i))) continue;
    auto cd = c.a.quotient_degrees(c.a.bracket(c.Y(i)));
    std::vector<std::uint32_t> want(c.dv.centers->degrees.begin(), c.dv.centers->degrees.begin() + i + 1);
    if (cd != want) return fail("(2) i = " + std::to_string(i));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      if (!(c.Y(i + 1).is_proper_subset_of(c.Y(i)) && c.Y(i + 1) == c.Y(j) &&
            c.Y(j + 1).is_proper_subset_of(c.Y(j))))
        continue;
      auto got = c.relative_degrees(c.a.bracket(c.Y(j)), c.a.bracket(c.Y(i)));
      std::set<std::uint32_t> want;
      for (std::size_t k = i + 1; k <= j; ++k) want.insert(c.d(k));
      if (got != want) return fail("(3) i = " + std::to_string(i) + ", j = " + std::to_string(j) + ": " + set_str(got));
    }
  return pass();
}

CheckResult four(Ctx& c) {
  if (!c.nbd()) return na("not nested by degrees");
  const auto& lat = c.lattice();
  const auto& ds = c.dv.centers->degrees;
  for (std::size_t m = 0; m < lat.size(); ++m) {
    const auto cd = c.a.quotient_degrees(lat[m]);
    const std::size_t i = std::find(ds.begin(), ds.end(), cd.back()) - ds.begin();
    if (!(c.zn(m) == c.Y(i))) return fail("N = " + c.sg(lat[m]) + ": Z_N differs from Y_" + std::to_string(i));
  }
  for (std::size_t i = 0; i < c.r(); ++i)
    if (c.Y(i + 1).is_proper_subset_of(c.Y(i)) && !(c.a.quotient_center(c.a.bracket(c.Y(i))) == c.Y(i)))
      return fail("Z(G/[Y_" + std::to_string(i) + ",G]) differs from Y_i/[Y_i,G]");
  return pass();
}

CheckResult fivea(Ctx& c) {
  if (!c.nbd()) return na("not nested by degrees");
  bool desc = true;
  for (std::size_t i = 0; i < c.r(); ++i) desc = desc && c.Y(i + 1).is_proper_subset_of(c.Y(i));
  bool match = c.nested() && c.r() == c.n();
  for (std::size_t i = 0; match && i <= c.n(); ++i) match = c.X(i) == c.Y(i);
  if (c.dv.strictly == desc && desc == match) return pass();
  return fail("strict " + std::to_string(c.dv.strictly) + ", descending " + std::to_string(desc) +
              ", equal to chain " + std::to_string(match));
}

CheckResult six(Ctx& c) {
  if (!c.nbd() || !c.a.prime() || c.r() < 2) return na("not a p-group nested by degrees with r >= 2");
  if (c.nested() && c.n() >= 2 && c.Y(2) == c.X(2) && c.X(2).is_proper_subset_of(c.Y(1))) return pass();
  return fail("Y_2 = X_2 < Y_1 fails");
}

// ---- GVZ and p-groups ---------------------------------------------------

CheckResult strict(Ctx& c) {
  if (!is_gvz(c.a)) return na("not GVZ");
  if (!(c.nested() == c.nbd() && c.nbd() == c.dv.strictly))
    return fail("nested " + std::to_string(c.nested()) + ", nbd " + std::to_string(c.nbd()) + ", strict " +
                std::to_string(c.dv.strictly));
  if (!c.nested()) return pass();
  if (c.r() != c.n()) return fail("r differs from n");
  for (std::size_t i = 0; i <= c.n(); ++i)
    if (std::size_t{c.d(i)} * c.d(i) != c.a.order() / c.X(i).size())
      return fail("d_" + std::to_string(i) + "^2 differs from |G:X_i|");
  return pass();
}

CheckResult semi_extraspecial_lemma(Ctx& c) {
  if (!c.nested() || c.n() == 0 || !is_gvz(c.a)) return na("not a nonabelian nested GVZ group");
  if (c.D().is_proper_subset_of(c.X(1))) return pass();
  if (c.a.prime() && is_semi_extraspecial(c.a)) return pass();
  return fail("G' = X_1 but G is not semi-extraspecial");
}

CheckResult sevena(Ctx& c) {
  auto p = c.a.prime();
  if (!p || c.a.is_abelian() || !c.nested()) return na("not a nonabelian nested p-group");
  auto square_root = [&](const Subgroup& x) -> std::optional<std::uint32_t> {
    auto e = log_prime(c.a.order() / x.size(), *p);
    if (!e || *e % 2) return std::nullopt;
    std::uint32_t d = 1;
    for (unsigned k = 0; k < *e / 2; ++k) d *= *p;
    return d;
  };
  auto d1 = square_root(c.X(1));
  if (!d1) return fail("(1) |G:X_1| is not a square");
  if (c.relative_degrees(c.B(1), c.D()) != std::set<std::uint32_t>{*d1}) return fail("(1) relative degrees");
  std::size_t top = 0;
  for (std::size_t i = 1; i <= c.n(); ++i)
    if (c.D().is_subset_of(c.X(i))) top = i;
  for (std::size_t j = 1; j <= top; ++j) {
    auto dj = square_root(c.X(j));
    if (!dj) return fail("(2) |G:X_" + std::to_string(j) + "| is not a square");
    if (c.relative_degrees(c.B(j), c.B(j - 1)) != std::set<std::uint32_t>{*dj})
      return fail("(2) relative degrees at j = " + std::to_string(j));
  }
  const auto& lat = c.lattice();
  for (std::size_t m = 0; m < lat.size(); ++m) {
    const auto& nn = lat[m];
    if (!c.B(1).is_subset_of(nn)) continue;
    const Subgroup ng = c.a.product(nn, c.D());
    if (!nn.is_proper_subset_of(ng)) continue;
    if (!(c.zn(m) == c.X(1)) || !quotient_is_vz(c.a, nn)) return fail("(3) N = " + c.sg(nn));
    if (ng == c.X(1) && !quotient_is_semi_extraspecial(c.a, nn))
      return fail("(3) G/N not semi-extraspecial for N = " + c.sg(nn));
  }
  if (!quotient_is_vz(c.a, c.B(1))) return fail("(4) G/[X_1,G] is not VZ");
  const std::size_t q = c.D().size() / c.B(1).size();
  if (q > *d1) return fail("(4) |G':[X_1,G]| exceeds d_1");
  return pass();
}

CheckResult bound(Ctx& c) {
  auto p = c.a.prime();
  if (!p || c.a.is_abelian() || !c.nested() || !c.D().is_subset_of(c.X(c.n())))
    return na("not a nonabelian nested p-group with G' <= X_n");
  unsigned total = 0;
  for (std::size_t i = 1; i <= c.n(); ++i) {
    const unsigned lhs = *log_prime(c.B(i - 1).size() / c.B(i).size(), *p);
    const unsigned di2 = *log_prime(c.a.order() / c.X(i).size(), *p);
    if (2 * lhs > di2) return fail("|[X_" + std::to_string(i - 1) + ",G]:[X_i,G]| exceeds d_i");
    total += di2;
  }
  if (2 * *log_prime(c.D().size(), *p) > total) return fail("|G'| exceeds d_1...d_n");
  return pass();
}

CheckResult cd_subset(Ctx& c) {
  if (!c.a.prime() || c.a.is_abelian() || !c.D().is_subset_of(c.a.center()))
    return na("not a nonabelian p-group of class 2");
  const auto cd = c.table().degree_set();
  const std::size_t k = cd.size() - 1;
  if (k > 20) return na("too many degrees");
  std::vector<bool> hit(std::size_t{1} << k, false);
  const auto& lat = c.lattice();
  for (std::size_t m = 0; m < lat.size(); ++m) {
    if (!lat[m].is_subset_of(c.D())) continue;
    std::size_t mask = 0;
    for (auto d : c.a.quotient_degrees(lat[m]))
      if (d != 1) mask |= std::size_t{1} << (std::find(cd.begin(), cd.end(), d) - cd.begin() - 1);
    hit[mask] = true;
  }
  for (std::size_t mask = 0; mask < hit.size(); ++mask)
    if (!hit[mask]) return fail("degree subset mask " + std::to_string(mask) + " not realized");
  return pass();
}

// G/M capable with witness G/[M-bracket], checked through quotient data.
std::optional<std::string> capable_vz_index(Ctx& c, const Subgroup& m) {
  const Subgroup z = c.a.quotient_center(m);
  if (z.size() == c.a.order() || !quotient_is_vz(c.a, m)) return std::nullopt;
  const std::size_t dq = c.a.product(c.D(), m).size() / m.size();
  if (c.a.order() / z.size() != dq * dq) return "M = " + c.sg(m);
  return std::string{};
}

CheckResult sevenb(Ctx& c) {
  if (!c.a.prime()) return na("not a p-group");
  // Witnesses: G/Z(G) with Gamma = G, and G/X_i with Gamma = G/[X_i,G].
  std::vector<Subgroup> ms{c.a.center()};
  if (c.nested())
    for (std::size_t i = 1; i <= c.n(); ++i) ms.push_back(c.X(i));
  bool any = false;
  for (const auto& m : ms) {
    auto r = capable_vz_index(c, m);
    if (!r) continue;
    any = true;
    if (!r->empty()) return fail("|G/M : Z(G/M)| differs from |(G/M)'|^2 for " + *r);
  }
  return any ? pass() : na("no nonabelian capable VZ quotient with witness");
}

CheckResult sevenc(Ctx& c) {
  if (!c.a.prime() || !c.nested() || c.n() < 2) return na("not a nested p-group with n >= 2");
  const Subgroup x2g = c.a.product(c.X(2), c.D());
  if (!c.X(2).is_proper_subset_of(x2g)) return na("G' <= X_2");
  const std::size_t a = c.a.order() / c.X(1).size();
  const std::size_t b = x2g.size() / c.X(2).size();
  const std::size_t q = c.D().size() / c.B(1).size();
  if (a != b * b || a != q * q) return fail("(1) index identities");
  if (!(intersection(c.X(2), c.D()) == c.B(1))) return fail("(1) X_2 meet G' differs from [X_1,G]");
  const auto& lat = c.lattice();
  for (auto i : lat.interval(c.X(2), c.X(1)))
    if (lat[i].size() < c.X(1).size() && quotient_is_ultraspecial(c.a, lat[i])) return pass();
  return fail("(2) no A with X_2 <= A < X_1 and G/A ultraspecial");
}

CheckResult p_in_cd(Ctx& c) {
  auto p = c.a.prime();
  if (!p || !c.nested()) return na("not a nested p-group");
  const auto cd = c.table().degree_set();
  if (std::find(cd.begin(), cd.end(), *p) == cd.end()) return na("p not a degree");
  if (c.a.order() / c.X(1).size() != std::size_t{*p} * *p) return fail("|G:X_1| is not p^2");
  if (c.D().size() / c.B(1).size() != *p) return fail("|G':[X_1,G]| is not p");
  return pass();
}

CheckResult last(Ctx& c) {
  auto cc = coclass(c.g);
  auto cls = nilpotency_class(c.g);
  if (!cc || *cc != 2 || !cls || *cls < 3) return na("not coclass 2 with class >= 3");
  if (!c.nested()) return fail("not nested");
  std::vector<Subgroup> z = c.a.upper_central().terms;
  std::reverse(z.begin(), z.end());
  if (z != c.nv.chain->terms.terms) return fail("chain of centers differs from the upper central series");
  if (*cls >= 4 && c.nbd()) return fail("class >= 4 yet nested by degrees");
  return pass();
}

// ---- cross checks -------------------------------------------------------

CheckResult gvz_nilpotent(Ctx& c) {
  if (!is_gvz(c.a)) return na("not GVZ");
  return c.a.is_nilpotent() ? pass() : fail("GVZ but not nilpotent");
}

CheckResult class2_gvz(Ctx& c) {
  if (nilpotency_class(c.g) != std::optional<unsigned>(2)) return na("class is not 2");
  return is_gvz(c.a) ? pass() : fail("class 2 but not GVZ");
}

CheckResult flag_implications(Ctx& c) {
  const bool gvz = is_gvz(c.a), vz = is_vz(c.a);
  if (c.dv.strictly && !c.nbd()) return fail("strict without nbd");
  if (c.nbd() && !c.nested()) return fail("nbd without nested");
  if (c.kc.kern_is_chain && !c.kc.nlkern_is_chain) return fail("Kern chain without nlKern chain");
  if (vz && !gvz) return fail("VZ without GVZ");
  if (is_ultraspecial(c.a) && !is_semi_extraspecial(c.a)) return fail("ultraspecial without semi-extraspecial");
  if (is_semi_extraspecial(c.a) && !vz) return fail("semi-extraspecial but not VZ");
  return pass();
}

CheckResult upper_central_in_chain(Ctx& c) {
  if (!c.nested()) return na("not nested");
  const auto& t = c.nv.chain->terms.terms;
  for (const auto& z : c.a.upper_central().terms)
    if (std::find(t.begin(), t.end(), z) == t.end()) return fail("upper central term " + c.sg(z) + " not in chain");
  return pass();
}

struct Entry {
  const char* id;
  const char* summary;
  CheckResult (*run)(Ctx&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = [] {
    std::vector<Entry> v{
        {"bound", "class-2 nested p-groups: commutator factors bounded by d_i", bound},
        {"cd-subset", "class-2 p-groups: every degree subset occurs for a quotient by N <= G'", cd_subset},
        {"class2-gvz", "class 2 implies GVZ", class2_gvz},
        {"defn", "chain of centers is a strict chain of all character centers", defn},
        {"degree-centers", "nested by degrees: relation between Y_j and X_i", degree_centers},
        {"fivea", "strictly nested by degrees iff Y descends iff Y = X", fivea},
        {"flag-implications", "implications between classifier flags", flag_implications},
        {"four", "nested by degrees: Z(G/N) = Y_i/N for the top degree of G/N", four},
        {"frobenius-quotient", "solvable non-nilpotent G/X_1 is Frobenius with kernel (G/X_1)'", frobenius_quotient},
        {"gvz-nilpotent", "GVZ implies nilpotent", gvz_nilpotent},
        {"knfive", "nlKern chain: (X_i meet G')/[X_i,G] cyclic of prime power order", knfive},
        {"knfive1", "nlKern chain: one of the two structural alternatives", knfive1},
        {"knfour", "nlKern chain implies nested", knfour},
        {"knfoura", "nlKern chain: normal M < G' are waists", knfoura},
        {"knone", "Kern chain: G/G' cyclic", knone},
        {"knthree", "ker inclusion implies center inclusion", knthree},
        {"kntwo", "nilpotent with Kern chain: cyclic p-group", kntwo},
        {"last", "coclass 2, class >= 3: chain is the upper central series", last},
        {"main1", "Kern chain iff lattice chain iff unique chief series", main1},
        {"main2-full", "nlKern chain iff waist condition iff quotient condition", main2_full},
        {"main3-equivalence", "character centers vs quotient centers", main3_equivalence},
        {"main4", "each chain step is central elementary abelian or has a unique minimal normal", main4},
        {"nine", "central steps: X and commutator factors elementary abelian for one p", nine},
        {"nine1", "runs of central steps give p-group factors", nine1},
        {"nine2", "X_{i-1}/X_j and commutator factor elementary abelian", nine2},
        {"nine3", "upper central factors elementary abelian for one p", nine3},
        {"nine4", "lower central factors elementary abelian for one p", nine4},
        {"nine5", "nilpotent nested: p-group times abelian", nine5},
        {"p-in-cd", "p in cd(G): |G:X_1| = p^2, |G':[X_1,G]| = p", p_in_cd},
        {"perfect-step", "non-central steps have perfect commutator", perfect_step},
        {"qian-wang", "p-groups: nlKern chain iff maximal class or |G'| = p with cyclic center", qian_wang},
        {"semi-extraspecial-lemma", "nested GVZ: semi-extraspecial or G' < X_1", semi_extraspecial_lemma},
        {"seven", "nested by degrees: degree sets of commutator quotients", seven},
        {"sevena", "nested p-groups: square index and VZ quotients", sevena},
        {"sevenb", "capable VZ p-groups: |G:Z| = |G'|^2", sevenb},
        {"sevenc", "nested p-groups with X_2 < X_2 G': index identities and ultraspecial quotient", sevenc},
        {"six", "p-group nested by degrees, r >= 2: Y_2 = X_2 < Y_1", six},
        {"sixa", "Z(G/N) = X_i/N where [X_i,G] <= N but not [X_{i-1},G]", sixa},
        {"sixb", "[X_{i-1},G] <= N or N <= X_i", sixb},
        {"sixc", "unique minimal normal subgroup over X_i when not central", sixc},
        {"sixd", "nilpotent iff every step is central", sixd},
        {"strict", "GVZ: nested iff nbd iff strict, with d_i^2 = |G:X_i|", strict},
        {"table-soundness", "orthogonality, kernels, centers", table_soundness},
        {"ten", "characters over N with center X_i detected by N[X_i,G]", ten},
        {"threea", "Z(G/[X_i,G]) = X_i/[X_i,G]", threea},
        {"threeb", "Z(chi) = X_i iff kernel sits between the commutators", threeb},
        {"threec", "commutators strictly descend", threec},
        {"twoa", "[Z(chi),G] <= ker chi", twoa},
        {"upper-central-in-chain", "upper central terms lie in the chain of centers", upper_central_in_chain},
        {"zero", "X_n = Z(G)", zero},
    };
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return std::string_view(a.id) < b.id; });
    return v;
  }();
  return r;
}

}  // namespace

const std::vector<CheckInfo>& theorem_checks() {
  static const std::vector<CheckInfo> info = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : registry()) v.push_back({e.id, e.summary});
    return v;
  }();
  return info;
}

std::vector<CheckResult> run_theorem_suite(GroupAnalysis& a, const std::vector<std::string>& ids) {
  for (const auto& id : ids)
    if (std::none_of(registry().begin(), registry().end(), [&](const Entry& e) { return id == e.id; }))
      throw InputError("unknown check id '" + id + "'");
  Ctx c(a);
  std::vector<CheckResult> out;
  for (const auto& e : registry()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
    CheckResult r = e.run(c);
    r.id = e.id;
    out.push_back(std::move(r));
  }
  return out;
}

void Table1Counts::add(const ClassificationReport& r) {
  if (order == 0) order = r.order;
  ++groups;
  if (!r.nilpotency_class || *r.nilpotency_class < 2) return;
  const unsigned k = *r.nilpotency_class;
  ++all[k];
  nested[k] += r.is_nested;
  nested_by_degrees[k] += r.is_nested_by_degrees;
  nested_gvz[k] += r.is_nested && r.is_gvz;
}

std::vector<unsigned> Table1Counts::classes() const {
  std::vector<unsigned> out;
  for (const auto& [k, v] : all) out.push_back(k);
  return out;
}

std::string render_table1(const Table1Counts& t) {
  const auto ks = t.classes();
  std::ostringstream os;
  auto cell = [&](std::size_t width, const std::string& s, bool left) {
    if (left) os << s << std::string(width - std::min(width, s.size()), ' ');
    else os << std::string(width - std::min(width, s.size()), ' ') << s;
  };
  const std::size_t w0 = 18, w = 8;
  cell(w0, "order " + std::to_string(t.order), true);
  for (auto k : ks) cell(w, "class " + std::to_string(k), false);
  os << "\n";
  auto row = [&](const char* name, const std::map<unsigned, std::size_t>& m) {
    cell(w0, name, true);
    for (auto k : ks) {
      auto it = m.find(k);
      cell(w, std::to_string(it == m.end() ? 0 : it->second), false);
    }
    os << "\n";
  };
  row("all", t.all);
  row("nested", t.nested);
  row("nested by degrees", t.nested_by_degrees);
  row("nested GVZ", t.nested_gvz);
  return os.str();
}

}  // namespace nested
