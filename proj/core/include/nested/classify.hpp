#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nested/chartable.hpp"
#include "nested/group.hpp"
#include "nested/lattice.hpp"

namespace nested {

/// Lazily computed facts about one group. Not thread-safe; use one instance
/// per worker.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(GroupPtr g, std::size_t order_cap = kDefaultOrderCap);
  explicit GroupAnalysis(GroupTable g, std::size_t order_cap = kDefaultOrderCap)
      : GroupAnalysis(std::make_shared<const GroupTable>(std::move(g)), order_cap) {}

  const GroupTable& group() const noexcept { return *g_; }
  const GroupPtr& group_ptr() const noexcept { return g_; }
  std::size_t order() const noexcept { return g_->order(); }
  std::size_t order_cap() const noexcept { return cap_; }

  const CharacterTable& table();
  const NormalLattice& lattice();
  const std::vector<Subgroup>& kernels();
  const std::vector<Subgroup>& centers();

  const Subgroup& whole();
  const Subgroup& trivial();
  const Subgroup& center();
  const Subgroup& derived();
  const SubgroupSeries& upper_central();
  const SubgroupSeries& lower_central();
  bool is_abelian();
  bool is_nilpotent();
  bool is_solvable();
  std::optional<std::uint32_t> prime();

  /// Z_N with Z_N/N = Z(G/N).
  Subgroup quotient_center(const Subgroup& n) { return quotient_center_preimage(*g_, n); }
  /// [N, G]
  Subgroup bracket(const Subgroup& n) { return commutator_with_group(*g_, n); }
  Subgroup product(const Subgroup& a, const Subgroup& b) { return normal_product(*g_, a, b); }

  /// Irreducibles of G/N: indices i with N <= ker chi_i.
  std::vector<std::size_t> characters_over(const Subgroup& n);
  /// cd(G/N), sorted.
  std::vector<std::uint32_t> quotient_degrees(const Subgroup& n);

 private:
  GroupPtr g_;
  std::size_t cap_;
  std::optional<CharacterTable> table_;
  std::optional<NormalLattice> lattice_;
  std::optional<std::vector<Subgroup>> kernels_, centers_;
  std::optional<Subgroup> whole_, trivial_, center_, derived_;
  std::optional<SubgroupSeries> upper_, lower_;
  std::optional<bool> solvable_;
};

struct ChainOfCenters {
  /// X_0 = G > X_1 > ... > X_n = Z(G).
  SubgroupSeries terms;
  /// [X_i, G] for each i.
  std::vector<Subgroup> commutators;
  std::size_t nested_length() const noexcept { return terms.terms.size() - 1; }
  const Subgroup& operator[](std::size_t i) const { return terms.terms[i]; }
};

struct NestedVerdict {
  bool nested = false;
  std::optional<ChainOfCenters> chain;
  /// Two irreducibles with incomparable centers, when not nested.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

NestedVerdict chain_of_centers(GroupAnalysis& a);

/// Character-free: every pair Z_N, Z_M of quotient-center preimages is
/// comparable. Returns the lattice indices of an incomparable pair.
std::optional<std::pair<std::size_t, std::size_t>> quotient_center_witness(GroupAnalysis& a);
inline bool is_nested_via_quotient_centers(GroupAnalysis& a) {
  return !quotient_center_witness(a).has_value();
}

struct DegreeCenters {
  /// 1 = d_0 < d_1 < ... < d_r
  std::vector<std::uint32_t> degrees;
  /// Y_j = Z(chi) for any chi of degree d_j.
  std::vector<Subgroup> y;
};

struct DegreeVerdict {
  bool nested_by_degrees = false;
  bool strictly = false;
  std::optional<DegreeCenters> centers;
};

DegreeVerdict nested_by_degrees(GroupAnalysis& a);

bool is_gvz(GroupAnalysis& a);
bool is_vz(GroupAnalysis& a);
bool is_camina_pair(GroupAnalysis& a, const Subgroup& n);
/// False for non-p-groups and abelian groups.
bool is_semi_extraspecial(GroupAnalysis& a);
bool is_ultraspecial(GroupAnalysis& a);

/// G/N is a VZ-group: nonlinear characters over N vanish outside Z_N.
bool quotient_is_vz(GroupAnalysis& a, const Subgroup& n);
/// G/M is extraspecial (p-group G).
bool quotient_is_extraspecial(GroupAnalysis& a, const Subgroup& m);
bool quotient_is_semi_extraspecial(GroupAnalysis& a, const Subgroup& n);
bool quotient_is_ultraspecial(GroupAnalysis& a, const Subgroup& n);

/// Frobenius with kernel N: N a proper nontrivial normal Hall subgroup and
/// C_N(g) = 1 for every g outside N.
bool is_frobenius_with_kernel(const GroupTable& g, const Subgroup& n);

struct KernelChains {
  bool kern_is_chain = false;
  bool nlkern_is_chain = false;
};
KernelChains kernel_chain_predicates(GroupAnalysis& a);

struct ClassificationReport {
  std::string label;
  std::size_t order = 0;
  std::optional<std::uint32_t> prime;
  std::optional<unsigned> nilpotency_class;
  std::optional<unsigned> coclass;
  std::uint64_t exponent = 0;
  std::size_t class_count = 0;
  std::vector<std::uint32_t> degrees;  // with multiplicity, ascending
  std::vector<std::uint32_t> cd;

  bool is_abelian = false;
  bool is_nested = false;
  bool is_nested_by_degrees = false;
  bool is_strictly_nested_by_degrees = false;
  bool is_gvz = false;
  bool is_vz = false;
  bool is_semi_extraspecial = false;
  bool is_ultraspecial = false;
  bool kern_is_chain = false;
  bool nlkern_is_chain = false;
  bool normal_lattice_is_chain = false;
  bool unique_chief_series = false;

  std::optional<ChainOfCenters> chain;
  std::optional<std::pair<std::size_t, std::size_t>> not_nested_witness;
  std::optional<DegreeCenters> degree_centers;
};

ClassificationReport classify(GroupAnalysis& a);
inline ClassificationReport classify(const GroupTable& g, std::size_t order_cap = kDefaultOrderCap) {
  GroupAnalysis a(g, order_cap);
  return classify(a);
}

bool is_prime(std::uint64_t n);
/// Distinct prime divisors of n.
std::vector<std::uint32_t> prime_divisors(std::size_t n);
/// k with n = p^k, or nullopt.
std::optional<unsigned> log_prime(std::size_t n, std::uint32_t p);

}  // namespace nested
