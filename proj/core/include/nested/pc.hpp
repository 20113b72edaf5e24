#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nested/group.hpp"

namespace nested {

/// Exponent vector (e_1, ..., e_k) standing for the normal word g_1^e_1 ... g_k^e_k.
using PcWord = std::vector<std::uint32_t>;

/// Power-commutator presentation on generators g_1..g_k (stored 0-based) with
/// prime relative orders. g_i^{p_i} and [g_j, g_i] (j > i) must be words in
/// g_{i+1}..g_k.
struct PcPresentation {
  std::string label;
  std::vector<std::uint32_t> primes;
  std::vector<PcWord> powers;
  /// Indexed [j][i] for j > i; entries with j <= i are unused.
  std::vector<std::vector<PcWord>> commutators;

  /// All relations trivial: the elementary/abelian group with these relative orders.
  static PcPresentation free_abelian_like(std::vector<std::uint32_t> primes, std::string label = {});

  std::size_t rank() const noexcept { return primes.size(); }
  /// Product of relative orders, saturating at SIZE_MAX.
  std::size_t order() const noexcept;
  PcWord identity_word() const { return PcWord(rank(), 0); }
  /// g_i as a word.
  PcWord generator_word(std::size_t i) const;

  PcWord& power(std::size_t i) { return powers[i]; }
  PcWord& commutator(std::size_t j, std::size_t i) { return commutators[j][i]; }
  const PcWord& commutator(std::size_t j, std::size_t i) const { return commutators[j][i]; }
};

/// Realizes the presentation by building each G_i = <g_i, ..., g_k> as a cyclic
/// extension of G_{i+1}, checking the extension conditions at every level.
/// Element index = mixed radix of the exponent vector, g_k least significant.
/// Throws InconsistentPresentation naming the failing relation, CapExceeded
/// above `order_cap`.
GroupTable build_from_pc(const PcPresentation& pc, std::size_t order_cap = kMaxTableOrder);

/// Index of a normal word in the table built by build_from_pc.
Element pc_word_index(const PcPresentation& pc, const PcWord& w);
PcWord pc_index_word(const PcPresentation& pc, Element x);

/// A pc presentation of a solvable table group along a composition series
/// refining the derived series. `image[x]` receives the index of x in
/// build_from_pc of the result, an explicit isomorphism. Throws InputError for
/// nonsolvable groups.
PcPresentation pc_from_group(const GroupTable& g, std::vector<Element>* image = nullptr);

}  // namespace nested
