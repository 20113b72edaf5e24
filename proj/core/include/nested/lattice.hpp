#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nested/group.hpp"

namespace nested {

/// Every normal subgroup of a group, sorted by (size, bit pattern): the
/// trivial subgroup comes first and the whole group last.
class NormalLattice {
 public:
  /// Join-closure of the element normal closures. Throws CapExceeded when
  /// |G| > cap.
  static NormalLattice compute(const GroupTable& g, std::size_t cap = kDefaultOrderCap);

  const std::vector<Subgroup>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Subgroup& operator[](std::size_t i) const { return members_[i]; }
  std::optional<std::size_t> index_of(const Subgroup& h) const;

  /// Indices of members M with N < M and nothing normal strictly between.
  std::vector<std::size_t> covers(std::size_t i) const;
  /// Members M with lower <= M <= upper.
  std::vector<std::size_t> interval(const Subgroup& lower, const Subgroup& upper) const;
  bool is_chain() const;

 private:
  std::vector<Subgroup> members_;
};

/// True iff W is comparable with every normal subgroup.
bool is_waist(const NormalLattice& lattice, const Subgroup& w);

/// Number of chief series of G, saturating at `cap`.
std::size_t count_chief_series_capped(const NormalLattice& lattice, std::size_t cap);
std::size_t count_chief_series_capped(const GroupTable& g, std::size_t cap,
                                      std::size_t order_cap = kDefaultOrderCap);

}  // namespace nested
