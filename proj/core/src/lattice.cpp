#include "nested/lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "nested/error.hpp"

namespace nested {

namespace {

struct Closure {
  Subgroup members;
  std::vector<Element> gens;
};

}  // namespace

NormalLattice NormalLattice::compute(const GroupTable& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("normal subgroup lattice", g.order(), cap);

  // One closure per conjugacy class; conjugates have the same closure.
  std::vector<Closure> closures;
  {
    Subgroup done(g.order());
    std::unordered_set<Subgroup, SubgroupHash> seen;
    for (Element x = 0; x < g.order(); ++x) {
      if (done.contains(x) || x == g.identity()) continue;
      std::vector<Element> orbit{x};
      done.insert(x);
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (Element t : g.generators()) {
          const Element y = g.conj(orbit[i], t);
          if (done.insert(y)) orbit.push_back(y);
        }
      const Element seed[] = {x};
      Subgroup c = normal_closure(g, seed);
      if (seen.insert(c).second) closures.push_back({c, subgroup_generators(g, c)});
    }
  }

  NormalLattice lat;
  std::unordered_set<Subgroup, SubgroupHash> found;
  found.insert(trivial_subgroup(g));
  lat.members_.push_back(trivial_subgroup(g));
  for (std::size_t i = 0; i < lat.members_.size(); ++i) {
    for (const auto& c : closures) {
      if (c.members.is_subset_of(lat.members_[i])) continue;
      Subgroup m = lat.members_[i];
      // N normal, so right-closing N under generators of C yields NC.
      std::vector<Element> queue = m.elements();
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (Element s : c.gens) {
          const Element y = g.mul(queue[q], s);
          if (m.insert(y)) queue.push_back(y);
        }
      if (found.insert(m).second) lat.members_.push_back(std::move(m));
    }
  }
  std::sort(lat.members_.begin(), lat.members_.end());
  return lat;
}

std::optional<std::size_t> NormalLattice::index_of(const Subgroup& h) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), h);
  if (it == members_.end() || !(*it == h)) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

std::vector<std::size_t> NormalLattice::covers(std::size_t i) const {
  std::vector<std::size_t> out;
  const Subgroup& n = members_[i];
  for (std::size_t j = i + 1; j < members_.size(); ++j) {
    const Subgroup& m = members_[j];
    if (m.size() == n.size() || !n.is_subset_of(m)) continue;
    // Members are sorted by size, so any intermediate is already in `out`.
    bool minimal = std::none_of(out.begin(), out.end(),
                                [&](std::size_t k) { return members_[k].is_subset_of(m); });
    if (minimal) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> NormalLattice::interval(const Subgroup& lower, const Subgroup& upper) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (lower.is_subset_of(members_[i]) && members_[i].is_subset_of(upper)) out.push_back(i);
  return out;
}

bool NormalLattice::is_chain() const {
  for (std::size_t i = 1; i < members_.size(); ++i)
    if (!members_[i - 1].is_proper_subset_of(members_[i])) return false;
  return true;
}

bool is_waist(const NormalLattice& lattice, const Subgroup& w) {
  return std::all_of(lattice.members().begin(), lattice.members().end(),
                     [&](const Subgroup& n) { return n.comparable_with(w); });
}

std::size_t count_chief_series_capped(const NormalLattice& lattice, std::size_t cap) {
  if (cap == 0) return 0;
  const std::size_t top = lattice.size() - 1;
  std::unordered_map<std::size_t, std::size_t> memo;
  // Maximal chains from member i up to G; each is the top of a chief series.
  auto count = [&](auto&& self, std::size_t i) -> std::size_t {
    if (i == top) return 1;
    if (auto it = memo.find(i); it != memo.end()) return it->second;
    std::size_t total = 0;
    for (std::size_t j : lattice.covers(i)) {
      total = std::min(cap, total + self(self, j));
      if (total >= cap) break;
    }
    memo[i] = total;
    return total;
  };
  return count(count, 0);
}

std::size_t count_chief_series_capped(const GroupTable& g, std::size_t cap, std::size_t order_cap) {
  return count_chief_series_capped(NormalLattice::compute(g, order_cap), cap);
}

}  // namespace nested
