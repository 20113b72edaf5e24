#include "nested/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "nested/error.hpp"

namespace nested {

// ---- Subgroup -------------------------------------------------------------

Subgroup Subgroup::from_elements(std::size_t n, std::span<const Element> members) {
  Subgroup s(n);
  for (Element g : members) {
    if (g >= n) throw InputError("element " + std::to_string(g) + " out of range");
    s.insert(g);
  }
  return s;
}

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept {
  if (size_ > other.size_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<Element>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Subgroup::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ size_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool operator<(const Subgroup& a, const Subgroup& b) noexcept {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return a.words_ < b.words_;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  Subgroup s(a.universe_);
  for (std::size_t i = 0; i < s.words_.size(); ++i) {
    s.words_[i] = a.words_[i] & b.words_[i];
    s.size_ += std::popcount(s.words_[i]);
  }
  return s;
}

// ---- GroupTable -----------------------------------------------------------

namespace {

// Right-multiplication closure of `start` under `gens`. When `start` is a
// subgroup (or {e}) the result is <start, gens>.
void close_right(const GroupTable& g, Subgroup& h, std::span<const Element> gens) {
  std::vector<Element> queue = h.elements();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Element x = queue[q];
    for (Element s : gens) {
      const Element y = g.mul(x, s);
      if (h.insert(y)) queue.push_back(y);
    }
  }
}

}  // namespace

GroupTable GroupTable::from_cayley(std::size_t n, std::vector<Element> product, std::string label) {
  if (n == 0) throw InputError("group order must be positive");
  if (n > kMaxTableOrder)
    throw CapExceeded("cayley table", n, kMaxTableOrder);
  if (product.size() != n * n)
    throw InputError("expected " + std::to_string(n * n) + " table entries, got " +
                     std::to_string(product.size()));
  for (std::size_t i = 0; i < product.size(); ++i)
    if (product[i] >= n)
      throw InputError("entry " + std::to_string(product[i]) + " at row " + std::to_string(i / n) +
                       " is out of range");

  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      auto v = product[r * n + c];
      if (seen[v]) throw InputError("not a Latin square: row " + std::to_string(r) + " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      auto v = product[r * n + c];
      if (seen[v]) throw InputError("not a Latin square: column " + std::to_string(c) + " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = product[e * n + x] == x && product[x * n + e] == x;
    if (ok) identity = static_cast<Element>(e);
  }
  if (!identity) throw InputError("no two-sided identity element");

  GroupTable t;
  t.n_ = n;
  t.identity_ = *identity;
  t.product_ = std::move(product);
  t.label_ = std::move(label);

  auto assoc = [&](Element a, Element b, Element c) {
    if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)))
      throw InputError("associativity fails for (" + std::to_string(a) + ", " + std::to_string(b) +
                       ", " + std::to_string(c) + ")");
  };
  if (n <= 512) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x6e6573746564ull);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < (1 << 20); ++i) assoc(pick(rng), pick(rng), pick(rng));
  }

  t.finish();
  return t;
}

GroupTable GroupTable::from_trusted(std::size_t n, std::vector<Element> product, Element identity,
                                    std::string label) {
  GroupTable t;
  t.n_ = n;
  t.identity_ = identity;
  t.product_ = std::move(product);
  t.label_ = std::move(label);
  t.finish();
  return t;
}

GroupTable GroupTable::with_label(std::string label) const {
  GroupTable t = *this;
  t.label_ = std::move(label);
  return t;
}

void GroupTable::finish() {
  inverse_.assign(n_, 0);
  orders_.assign(n_, 0);
  for (Element a = 0; a < n_; ++a) {
    std::uint32_t k = 1;
    Element x = a;
    for (Element next = mul(x, a); x != identity_; next = mul(x, a)) {
      if (next == identity_) inverse_[a] = x;
      x = next;
      ++k;
    }
    if (a == identity_) inverse_[a] = identity_;
    orders_[a] = k;
  }

  // Greedy: prefer elements of large order, so cyclic groups get one generator.
  std::vector<Element> by_order(n_);
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return orders_[a] > orders_[b]; });
  generators_.clear();
  Subgroup h(n_);
  h.insert(identity_);
  for (Element x : by_order) {
    if (h.size() == n_) break;
    if (h.contains(x)) continue;
    generators_.push_back(x);
    close_right(*this, h, generators_);
  }
}

Element GroupTable::pow(Element g, std::int64_t k) const noexcept {
  const std::int64_t o = orders_[g];
  k %= o;
  if (k < 0) k += o;
  Element r = identity_;
  Element b = g;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::vector<std::string> GroupTable::invariant_violations(std::size_t exhaustive_limit) const {
  std::vector<std::string> out;
  if (product_.size() != n_ * n_) {
    out.push_back("table size mismatch");
    return out;
  }
  std::vector<std::uint8_t> row(n_), col(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    std::fill(row.begin(), row.end(), 0);
    std::fill(col.begin(), col.end(), 0);
    for (std::size_t c = 0; c < n_; ++c) {
      const auto a = product_[r * n_ + c], b = product_[c * n_ + r];
      if (a >= n_ || b >= n_ || row[a]++ || col[b]++) {
        out.push_back("Latin square violated at row/column " + std::to_string(r));
        return out;
      }
    }
  }
  for (Element x = 0; x < n_; ++x) {
    if (mul(identity_, x) != x || mul(x, identity_) != x) {
      out.push_back("identity fails at " + std::to_string(x));
      break;
    }
  }
  for (Element x = 0; x < n_; ++x) {
    if (mul(x, inverse_[x]) != identity_) {
      out.push_back("inverse fails at " + std::to_string(x));
      break;
    }
  }
  auto bad = [&](Element a, Element b, Element c) { return mul(mul(a, b), c) != mul(a, mul(b, c)); };
  if (n_ <= exhaustive_limit) {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        for (Element c = 0; c < n_; ++c)
          if (bad(a, b, c)) {
            out.push_back("associativity fails");
            return out;
          }
  } else {
    std::mt19937_64 rng(0x6e6573746564ull);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n_ - 1));
    for (int i = 0; i < (1 << 18); ++i)
      if (bad(pick(rng), pick(rng), pick(rng))) {
        out.push_back("associativity fails (sampled)");
        break;
      }
  }
  return out;
}

// ---- subgroups ------------------------------------------------------------

Subgroup trivial_subgroup(const GroupTable& g) {
  Subgroup s(g.order());
  s.insert(g.identity());
  return s;
}

Subgroup whole_group(const GroupTable& g) {
  Subgroup s(g.order());
  for (Element x = 0; x < g.order(); ++x) s.insert(x);
  return s;
}

Subgroup subgroup_generated(const GroupTable& g, std::span<const Element> seed) {
  Subgroup h = trivial_subgroup(g);
  close_right(g, h, seed);
  return h;
}

std::vector<Element> subgroup_generators(const GroupTable& g, const Subgroup& h) {
  std::vector<Element> gens;
  Subgroup k = trivial_subgroup(g);
  if (k.size() == h.size()) return gens;
  std::vector<Element> elems = h.elements();
  std::stable_sort(elems.begin(), elems.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  for (Element x : elems) {
    if (k.contains(x)) continue;
    gens.push_back(x);
    close_right(g, k, gens);
    if (k.size() == h.size()) break;
  }
  return gens;
}

Subgroup normal_closure(const GroupTable& g, std::span<const Element> seed) {
  std::vector<Element> gens(seed.begin(), seed.end());
  Subgroup n = subgroup_generated(g, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Element t : g.generators()) {
      const Element c = g.conj(gens[i], t);
      if (!n.contains(c)) {
        gens.push_back(c);
        close_right(g, n, gens);
      }
    }
  }
  return n;
}

Subgroup join(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> gens = subgroup_generators(g, a);
  for (Element x : subgroup_generators(g, b)) gens.push_back(x);
  return subgroup_generated(g, gens);
}

Subgroup normal_product(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  Subgroup h = a;
  auto gens = subgroup_generators(g, b);
  for (Element x : subgroup_generators(g, a)) gens.push_back(x);
  close_right(g, h, gens);
  return h;
}

Subgroup center(const GroupTable& g) {
  Subgroup z(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element t : g.generators())
      if (g.mul(x, t) != g.mul(t, x)) {
        central = false;
        break;
      }
    if (central) z.insert(x);
  }
  return z;
}

Subgroup centralizer(const GroupTable& g, Element x) {
  Subgroup c(g.order());
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.insert(y);
  return c;
}

Subgroup commutator_with_group(const GroupTable& g, const Subgroup& n) {
  std::vector<Element> seed;
  for (Element x : subgroup_generators(g, n))
    for (Element t : g.generators()) seed.push_back(g.comm(x, t));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return normal_closure(g, seed);
}

Subgroup commutator_subgroup(const GroupTable& g, const Subgroup& h, const Subgroup& k) {
  if (is_normal(g, h) && is_normal(g, k)) {
    // Normal closure of generator commutators suffices for normal H, K.
    std::vector<Element> seed;
    auto kg = subgroup_generators(g, k);
    for (Element x : subgroup_generators(g, h))
      for (Element y : kg) seed.push_back(g.comm(x, y));
    return normal_closure(g, seed);
  }
  Subgroup seen(g.order());
  std::vector<Element> seed;
  for (Element x : h.elements())
    for (Element y : k.elements()) {
      const Element c = g.comm(x, y);
      if (seen.insert(c)) seed.push_back(c);
    }
  return subgroup_generated(g, seed);
}

Subgroup derived_subgroup(const GroupTable& g) {
  return commutator_with_group(g, whole_group(g));
}

Subgroup quotient_center_preimage(const GroupTable& g, const Subgroup& n) {
  Subgroup z(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element t : g.generators())
      if (!n.contains(g.comm(x, t))) {
        central = false;
        break;
      }
    if (central) z.insert(x);
  }
  return z;
}

bool is_subgroup(const GroupTable& g, const Subgroup& h) {
  if (h.universe() != g.order() || !h.contains(g.identity())) return false;
  if (g.order() % h.size()) return false;
  Subgroup k = trivial_subgroup(g);
  std::vector<Element> gens;
  for (Element x : h.elements()) {
    if (k.contains(x)) continue;
    gens.push_back(x);
    close_right(g, k, gens);
    if (!k.is_subset_of(h)) return false;
  }
  return k == h;
}

std::optional<std::pair<Element, Element>> normality_witness(const GroupTable& g, const Subgroup& n) {
  for (Element x : subgroup_generators(g, n))
    for (Element t : g.generators())
      if (!n.contains(g.conj(x, t))) return std::pair{x, t};
  return std::nullopt;
}

// ---- quotients ------------------------------------------------------------

Subgroup QuotientMap::image(const Subgroup& h) const {
  Subgroup s(target->order());
  for (Element x : h.elements()) s.insert(projection[x]);
  return s;
}

Subgroup QuotientMap::preimage(const Subgroup& h) const {
  Subgroup s(source->order());
  for (Element x = 0; x < source->order(); ++x)
    if (h.contains(projection[x])) s.insert(x);
  return s;
}

QuotientMap quotient(const GroupPtr& gp, const Subgroup& n) {
  const GroupTable& g = *gp;
  if (!is_subgroup(g, n)) throw InputError("quotient: not a subgroup");
  if (auto w = normality_witness(g, n))
    throw InputError("quotient: subgroup is not normal: conjugating " + std::to_string(w->first) +
                     " by " + std::to_string(w->second) + " leaves it");

  constexpr Element kUnset = ~Element{0};
  const auto members = n.elements();
  const std::size_t m = g.order() / n.size();
  std::vector<Element> proj(g.order(), kUnset);
  std::vector<Element> reps;
  reps.reserve(m);
  // Process the identity coset first so it becomes target element 0.
  auto assign = [&](Element x) {
    const auto q = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element y : members) proj[g.mul(x, y)] = q;
  };
  assign(g.identity());
  for (Element x = 0; x < g.order(); ++x)
    if (proj[x] == kUnset) assign(x);

  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = proj[g.mul(reps[a], reps[b])];

  QuotientMap q;
  q.source = gp;
  q.target = std::make_shared<const GroupTable>(GroupTable::from_trusted(
      m, std::move(table), 0, g.label().empty() ? std::string{} : g.label() + "/N"));
  q.projection = std::move(proj);
  q.kernel = n;
  return q;
}

// ---- series ---------------------------------------------------------------

SubgroupSeries upper_central_series(const GroupTable& g) {
  SubgroupSeries s{{center(g)}, SeriesKind::UpperCentral};
  for (;;) {
    Subgroup next = quotient_center_preimage(g, s.terms.back());
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

SubgroupSeries lower_central_series(const GroupTable& g) {
  SubgroupSeries s{{whole_group(g)}, SeriesKind::LowerCentral};
  for (;;) {
    Subgroup next = commutator_with_group(g, s.terms.back());
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

SubgroupSeries derived_series(const GroupTable& g) {
  SubgroupSeries s{{whole_group(g)}, SeriesKind::Derived};
  for (;;) {
    const Subgroup& h = s.terms.back();
    Subgroup next = commutator_subgroup(g, h, h);
    if (next == h) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

// ---- structure ------------------------------------------------------------

bool is_abelian(const GroupTable& g) {
  auto gens = g.generators();
  for (Element a : gens)
    for (Element b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const GroupTable& g) { return g.generators().size() <= 1; }

bool is_nilpotent(const GroupTable& g) {
  return upper_central_series(g).terms.back().size() == g.order();
}

bool is_solvable(const GroupTable& g) { return derived_series(g).terms.back().size() == 1; }

std::uint64_t exponent(const GroupTable& g) {
  std::uint64_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, std::uint64_t{g.element_order(x)});
  return e;
}

namespace {

std::optional<std::uint32_t> prime_of_power(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t p = 2;
  while (p * p <= n && n % p) ++p;
  if (n % p) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return static_cast<std::uint32_t>(p);
}

unsigned log_base(std::size_t n, std::size_t p) {
  unsigned k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

std::optional<std::uint32_t> p_group_prime(const GroupTable& g) { return prime_of_power(g.order()); }

std::optional<unsigned> nilpotency_class(const GroupTable& g) {
  auto lower = lower_central_series(g);
  if (lower.terms.back().size() != 1) return std::nullopt;
  return static_cast<unsigned>(lower.terms.size() - 1);
}

std::optional<unsigned> coclass(const GroupTable& g) {
  auto p = p_group_prime(g);
  if (!p) return std::nullopt;
  const unsigned m = log_base(g.order(), *p);
  if (m < 2) return std::nullopt;
  return m - *nilpotency_class(g);
}

std::optional<bool> is_maximal_class(const GroupTable& g) {
  auto cc = coclass(g);
  if (!cc) return std::nullopt;
  return *cc == 1;
}

std::uint32_t order_modulo(const GroupTable& g, Element x, const Subgroup& lower) {
  std::uint32_t t = 1;
  Element y = x;
  while (!lower.contains(y)) {
    y = g.mul(y, x);
    ++t;
  }
  return t;
}

std::optional<std::uint32_t> section_p_group_prime(const Subgroup& upper, const Subgroup& lower) {
  return prime_of_power(upper.size() / lower.size());
}

bool section_is_abelian(const GroupTable& g, const Subgroup& upper, const Subgroup& lower) {
  auto gens = subgroup_generators(g, upper);
  for (Element a : gens)
    for (Element b : gens)
      if (!lower.contains(g.comm(a, b))) return false;
  return true;
}

std::optional<std::uint32_t> section_elementary_abelian_prime(const GroupTable& g,
                                                              const Subgroup& upper,
                                                              const Subgroup& lower) {
  auto p = section_p_group_prime(upper, lower);
  if (!p || !section_is_abelian(g, upper, lower)) return std::nullopt;
  for (Element x : subgroup_generators(g, upper))
    if (!lower.contains(g.pow(x, *p))) return std::nullopt;
  return p;
}

bool section_is_cyclic(const GroupTable& g, const Subgroup& upper, const Subgroup& lower) {
  const std::size_t index = upper.size() / lower.size();
  if (index == 1) return true;
  for (Element x : upper.elements())
    if (g.element_order(x) % index == 0 && order_modulo(g, x, lower) == index) return true;
  return false;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxTableOrder) throw CapExceeded("direct product", n, kMaxTableOrder);
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = static_cast<Element>(
          a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
          b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
  std::string label;
  if (!a.label().empty() || !b.label().empty()) label = a.label() + "x" + b.label();
  return GroupTable::from_trusted(n, std::move(table),
                                  static_cast<Element>(a.identity() * nb + b.identity()),
                                  std::move(label));
}

}  // namespace nested
