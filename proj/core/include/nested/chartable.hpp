#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nested/cyclotomic.hpp"
#include "nested/group.hpp"

namespace nested {

/// Conjugacy classes. Class 0 is {identity}; the others are ordered by their
/// smallest element.
struct ClassData {
  std::vector<std::uint32_t> class_of;
  std::vector<Element> representatives;
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::vector<Element>> members;
  /// power_map[c][s] = class of rep_c^s, for 0 <= s < order(rep_c).
  std::vector<std::vector<std::uint32_t>> power_map;

  std::size_t count() const noexcept { return sizes.size(); }
  std::uint32_t element_order(std::uint32_t c) const noexcept {
    return static_cast<std::uint32_t>(power_map[c].size());
  }
  std::uint32_t power_class(std::int64_t t, std::uint32_t c) const noexcept;
};

ClassData conjugacy_classes(const GroupTable& g);

/// Exact ordinary character table. Values are eigenvalue-multiplicity vectors
/// over zeta_e, e = exp(G): values[i][c] lists (k, m) with m the multiplicity
/// of zeta_e^k as an eigenvalue of the representation at class c.
class CharacterTable {
 public:
  std::size_t size() const noexcept { return degrees_.size(); }
  std::uint32_t exponent() const noexcept { return exponent_; }
  std::uint64_t prime() const noexcept { return prime_; }
  const ClassData& classes() const noexcept { return classes_; }
  const std::vector<std::uint32_t>& degrees() const noexcept { return degrees_; }
  std::uint32_t degree(std::size_t i) const { return degrees_[i]; }
  const RootSum& value(std::size_t i, std::size_t c) const { return values_[i][c]; }
  const CyclotomicRing& ring() const noexcept { return ring_; }

  bool is_linear(std::size_t i) const { return degrees_[i] == 1; }
  /// Value concentrated at k = 0 with multiplicity chi(1).
  bool in_kernel(std::size_t i, std::size_t c) const;
  /// Value concentrated at a single root of unity.
  bool in_center(std::size_t i, std::size_t c) const;
  bool value_is_zero(std::size_t i, std::size_t c) const;

  Subgroup kernel(std::size_t i) const;
  Subgroup center(std::size_t i) const;

  /// Sorted distinct degrees.
  std::vector<std::uint32_t> degree_set() const;

  /// Assembles a table from raw parts; used by the solver and by tests that
  /// perturb tables.
  CharacterTable(ClassData classes, std::uint32_t exponent, std::uint64_t prime,
                 std::vector<std::uint32_t> degrees, std::vector<std::vector<RootSum>> values);

  void swap_rows(std::size_t a, std::size_t b);
  void set_degree(std::size_t i, std::uint32_t d) { degrees_[i] = d; }

 private:
  ClassData classes_;
  std::uint32_t exponent_;
  std::uint64_t prime_;
  std::vector<std::uint32_t> degrees_;
  std::vector<std::vector<RootSum>> values_;
  CyclotomicRing ring_;
};

/// Dixon-Schneider over F_p with exact lifting. Throws CapExceeded when
/// |G| > order_cap, InternalError if eigenspace splitting stalls.
CharacterTable compute_character_table(const GroupTable& g,
                                       std::size_t order_cap = kDefaultOrderCap);

/// Sum of squares, exact row and column orthogonality, class count. Empty
/// when the table is sound.
std::vector<std::string> verify_table(const CharacterTable& t, const GroupTable& g);

/// Smallest prime p = 1 (mod e) with p > 2 sqrt(n) and p > max_class.
std::uint64_t choose_prime(std::uint32_t e, std::size_t n, std::size_t max_class);

}  // namespace nested
