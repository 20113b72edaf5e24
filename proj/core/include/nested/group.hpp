#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nested {

using Element = std::uint32_t;

/// Default order cap for operations that enumerate the normal lattice.
inline constexpr std::size_t kDefaultOrderCap = 4096;

/// Hard ceiling on the order of any group table this library will build
/// (a table of order 2^13 already occupies 256 MiB).
inline constexpr std::size_t kMaxTableOrder = std::size_t{1} << 13;

/// A set of element indices of some group, stored as a bitset. Every instance
/// produced by this library is a subgroup of the group it came from.
class Subgroup {
 public:
  Subgroup() = default;

  /// Empty set over a universe of `n` elements; not a subgroup until filled.
  explicit Subgroup(std::size_t n) : universe_(n), words_((n + 63) / 64, 0) {}

  static Subgroup from_elements(std::size_t n, std::span<const Element> members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return size_; }

  bool contains(Element g) const noexcept {
    return (words_[g >> 6] >> (g & 63)) & 1u;
  }

  /// Returns true if `g` was newly inserted.
  bool insert(Element g) noexcept {
    auto& w = words_[g >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (g & 63);
    if (w & bit) return false;
    w |= bit;
    ++size_;
    return true;
  }

  bool is_subset_of(const Subgroup& other) const noexcept;
  bool is_proper_subset_of(const Subgroup& other) const noexcept {
    return size_ < other.size_ && is_subset_of(other);
  }
  bool comparable_with(const Subgroup& other) const noexcept {
    return is_subset_of(other) || other.is_subset_of(*this);
  }

  std::vector<Element> elements() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  /// Total order: by size, then by bit pattern. Used for canonical listings.
  friend bool operator<(const Subgroup& a, const Subgroup& b) noexcept;

  friend Subgroup intersection(const Subgroup& a, const Subgroup& b);

 private:
  std::size_t universe_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const noexcept { return s.hash(); }
};

/// Full multiplication table of a finite group. Immutable once built.
class GroupTable {
 public:
  GroupTable() = default;

  /// Validates every table invariant eagerly (Latin square, identity,
  /// inverses, associativity; associativity exhaustive for n <= 512 and
  /// sampled above). Throws InputError with a specific diagnostic.
  static GroupTable from_cayley(std::size_t n, std::vector<Element> product,
                                std::string label = {});

  /// Skips validation; the caller guarantees a group table.
  static GroupTable from_trusted(std::size_t n, std::vector<Element> product,
                                 Element identity, std::string label = {});

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  const std::string& label() const noexcept { return label_; }
  GroupTable with_label(std::string label) const;

  Element mul(Element a, Element b) const noexcept { return product_[std::size_t{a} * n_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  /// by^-1 * g * by
  Element conj(Element g, Element by) const noexcept { return mul(mul(inverse_[by], g), by); }
  /// a^-1 b^-1 a b
  Element comm(Element a, Element b) const noexcept {
    return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
  }
  Element pow(Element g, std::int64_t k) const noexcept;
  std::uint32_t element_order(Element g) const noexcept { return orders_[g]; }

  /// A small generating set, chosen greedily and deterministically.
  std::span<const Element> generators() const noexcept { return generators_; }
  std::span<const Element> product_table() const noexcept { return product_; }
  std::span<const Element> inverses() const noexcept { return inverse_; }

  /// Re-checks all table invariants; empty when the table is a group.
  std::vector<std::string> invariant_violations(std::size_t exhaustive_limit = 512) const;

 private:
  void finish();

  std::size_t n_ = 0;
  Element identity_ = 0;
  std::vector<Element> product_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Element> generators_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

Subgroup trivial_subgroup(const GroupTable& g);
Subgroup whole_group(const GroupTable& g);

Subgroup subgroup_generated(const GroupTable& g, std::span<const Element> seed);
/// Greedy generating set of H (deterministic, ascending element order).
std::vector<Element> subgroup_generators(const GroupTable& g, const Subgroup& h);
Subgroup normal_closure(const GroupTable& g, std::span<const Element> seed);
/// <A, B>
Subgroup join(const GroupTable& g, const Subgroup& a, const Subgroup& b);
/// AB for normal A, B (a subgroup because either factor is normal).
Subgroup normal_product(const GroupTable& g, const Subgroup& a, const Subgroup& b);

Subgroup center(const GroupTable& g);
Subgroup centralizer(const GroupTable& g, Element x);
/// [H, K], generated by all h^-1 k^-1 h k.
Subgroup commutator_subgroup(const GroupTable& g, const Subgroup& h, const Subgroup& k);
/// [N, G] for normal N, computed from the generators of G.
Subgroup commutator_with_group(const GroupTable& g, const Subgroup& n);
Subgroup derived_subgroup(const GroupTable& g);

/// Preimage of Z(G/N): {x : [x, y] in N for all y}. Requires N normal.
Subgroup quotient_center_preimage(const GroupTable& g, const Subgroup& n);

bool is_subgroup(const GroupTable& g, const Subgroup& h);
/// (n, t) with t^-1 n t outside N, or nullopt when N is normal.
std::optional<std::pair<Element, Element>> normality_witness(const GroupTable& g,
                                                             const Subgroup& n);
inline bool is_normal(const GroupTable& g, const Subgroup& n) {
  return !normality_witness(g, n).has_value();
}

/// Surjective homomorphism G -> G/N.
struct QuotientMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<Element> projection;
  Subgroup kernel;

  Subgroup image(const Subgroup& h) const;
  Subgroup preimage(const Subgroup& h) const;
};

/// Throws InputError naming a conjugation witness if N is not normal.
QuotientMap quotient(const GroupPtr& g, const Subgroup& n);

enum class SeriesKind { ChainOfCenters, UpperCentral, LowerCentral, Derived, Chief };

struct SubgroupSeries {
  std::vector<Subgroup> terms;
  SeriesKind kind;
};

/// Z_1 <= Z_2 <= ... <= Z_infinity (starts at Z(G), not at 1).
SubgroupSeries upper_central_series(const GroupTable& g);
/// G = gamma_1 >= gamma_2 >= ... until stable.
SubgroupSeries lower_central_series(const GroupTable& g);
/// G >= G' >= G'' >= ... until stable.
SubgroupSeries derived_series(const GroupTable& g);

bool is_abelian(const GroupTable& g);
bool is_cyclic(const GroupTable& g);
bool is_nilpotent(const GroupTable& g);
bool is_solvable(const GroupTable& g);
/// lcm of element orders.
std::uint64_t exponent(const GroupTable& g);
/// The prime p when |G| = p^k with k >= 1; nullopt otherwise.
std::optional<std::uint32_t> p_group_prime(const GroupTable& g);
std::optional<unsigned> nilpotency_class(const GroupTable& g);
/// Coclass of a p-group of order p^m, m >= 2; nullopt otherwise.
std::optional<unsigned> coclass(const GroupTable& g);
std::optional<bool> is_maximal_class(const GroupTable& g);

/// Smallest t >= 1 with x^t in L.
std::uint32_t order_modulo(const GroupTable& g, Element x, const Subgroup& lower);
/// p when U/L is a nontrivial p-group; nullopt when trivial or not of prime power order.
std::optional<std::uint32_t> section_p_group_prime(const Subgroup& upper, const Subgroup& lower);
/// p when U/L is a nontrivial elementary abelian p-group. Requires L normal in U.
std::optional<std::uint32_t> section_elementary_abelian_prime(const GroupTable& g,
                                                              const Subgroup& upper,
                                                              const Subgroup& lower);
bool section_is_abelian(const GroupTable& g, const Subgroup& upper, const Subgroup& lower);
bool section_is_cyclic(const GroupTable& g, const Subgroup& upper, const Subgroup& lower);

/// Direct product G x H with element (a, b) at index a * |H| + b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

}  // namespace nested
