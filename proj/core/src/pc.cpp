#include "nested/pc.hpp"

#include <algorithm>
#include <limits>

#include "nested/error.hpp"

namespace nested {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string gen_name(std::size_t i) { return "g" + std::to_string(i + 1); }

// Radix weights: weight[i] = p_{i+1} * ... * p_k.
std::vector<std::size_t> radix_weights(const PcPresentation& pc) {
  std::vector<std::size_t> w(pc.rank() + 1, 1);
  for (std::size_t i = pc.rank(); i-- > 0;) w[i] = w[i + 1] * pc.primes[i];
  return w;
}

void check_word(const PcPresentation& pc, const PcWord& w, std::size_t first_allowed,
                const std::string& what) {
  if (w.size() != pc.rank())
    throw InputError(what + ": expected " + std::to_string(pc.rank()) + " exponents");
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] >= pc.primes[j])
      throw InputError(what + ": exponent of " + gen_name(j) + " is not below its relative order");
    if (j < first_allowed && w[j] != 0)
      throw InputError(what + ": word must lie in <" + gen_name(first_allowed) + ", ...>");
  }
}

}  // namespace

PcPresentation PcPresentation::free_abelian_like(std::vector<std::uint32_t> primes, std::string label) {
  PcPresentation pc;
  pc.label = std::move(label);
  pc.primes = std::move(primes);
  const std::size_t k = pc.rank();
  pc.powers.assign(k, PcWord(k, 0));
  pc.commutators.assign(k, std::vector<PcWord>(k, PcWord(k, 0)));
  return pc;
}

std::size_t PcPresentation::order() const noexcept {
  std::size_t n = 1;
  for (auto p : primes) {
    if (n > std::numeric_limits<std::size_t>::max() / p) return std::numeric_limits<std::size_t>::max();
    n *= p;
  }
  return n;
}

PcWord PcPresentation::generator_word(std::size_t i) const {
  PcWord w(rank(), 0);
  w[i] = 1;
  return w;
}

Element pc_word_index(const PcPresentation& pc, const PcWord& w) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < pc.rank(); ++i) idx = idx * pc.primes[i] + w[i];
  return static_cast<Element>(idx);
}

PcWord pc_index_word(const PcPresentation& pc, Element x) {
  PcWord w(pc.rank(), 0);
  std::size_t v = x;
  for (std::size_t i = pc.rank(); i-- > 0;) {
    w[i] = static_cast<std::uint32_t>(v % pc.primes[i]);
    v /= pc.primes[i];
  }
  return w;
}

GroupTable build_from_pc(const PcPresentation& pc, std::size_t order_cap) {
  const std::size_t k = pc.rank();
  if (pc.powers.size() != k || pc.commutators.size() != k)
    throw InputError("presentation arrays do not match the generator count");
  for (std::size_t i = 0; i < k; ++i)
    if (!is_prime(pc.primes[i]))
      throw InputError("relative order of " + gen_name(i) + " is not prime");
  const std::size_t order = pc.order();
  const std::size_t cap = std::min(order_cap, kMaxTableOrder);
  if (order > cap) throw CapExceeded("pc presentation", order, cap);
  for (std::size_t i = 0; i < k; ++i) {
    check_word(pc, pc.powers[i], i + 1, "power relation of " + gen_name(i));
    if (pc.commutators[i].size() != k) throw InputError("commutator table is ragged");
    for (std::size_t j = i + 1; j < k; ++j)
      check_word(pc, pc.commutators[j][i], i + 1,
                 "commutator [" + gen_name(j) + "," + gen_name(i) + "]");
  }

  const auto weight = radix_weights(pc);
  // Level tables are nested: G_{i+1} occupies indices 0..weight[i+1]-1 of G_i.
  std::vector<Element> table{0};
  for (std::size_t i = k; i-- > 0;) {
    const std::size_t m = weight[i + 1];
    const std::uint32_t p = pc.primes[i];
    auto mul = [&](Element a, Element b) { return table[std::size_t{a} * m + b]; };
    auto power = [&](Element a, std::uint32_t e) {
      Element r = 0;
      for (std::uint32_t t = 0; t < e; ++t) r = mul(r, a);
      return r;
    };
    auto word = [&](const PcWord& w) { return static_cast<Element>(pc_word_index(pc, w)); };
    auto gen = [&](std::size_t j) { return static_cast<Element>(weight[j + 1]); };
    auto inv = [&](Element a) {
      for (Element b = 0; b < m; ++b)
        if (mul(a, b) == 0) return b;
      throw InternalError("pc level table lost its inverses");
    };
    auto comm = [&](Element a, Element b) { return mul(mul(inv(a), inv(b)), mul(a, b)); };

    // sigma = conjugation by g_i restricted to G_{i+1}; g_j^{g_i} = g_j [g_j, g_i].
    std::vector<Element> sigma_gen(k, 0);
    for (std::size_t j = i + 1; j < k; ++j) sigma_gen[j] = mul(gen(j), word(pc.commutators[j][i]));
    auto sigma_of_word = [&](const PcWord& w) {
      Element r = 0;
      for (std::size_t j = i + 1; j < k; ++j) r = mul(r, power(sigma_gen[j], w[j]));
      return r;
    };
    std::vector<Element> sigma(m);
    for (Element h = 0; h < m; ++h) sigma[h] = sigma_of_word(pc_index_word(pc, h));

    const std::string by = " under conjugation by " + gen_name(i);
    // von Dyck: sigma respects every relation of G_{i+1}.
    for (std::size_t j = i + 1; j < k; ++j) {
      if (power(sigma_gen[j], pc.primes[j]) != sigma[word(pc.powers[j])])
        throw InconsistentPresentation("power relation of " + gen_name(j) + " fails" + by);
      for (std::size_t l = j + 1; l < k; ++l)
        if (comm(sigma_gen[l], sigma_gen[j]) != sigma[word(pc.commutators[l][j])])
          throw InconsistentPresentation("commutator relation [" + gen_name(l) + "," + gen_name(j) +
                                         "] fails" + by);
    }
    for (Element h = 1; h < m; ++h)
      if (sigma[h] == 0)
        throw InconsistentPresentation("conjugation by " + gen_name(i) + " is not injective");
    const Element w = word(pc.powers[i]);
    if (sigma[w] != w)
      throw InconsistentPresentation("power relation of " + gen_name(i) + " is not fixed" + by);
    // sigma^p must be conjugation by w = g_i^p.
    const Element w_inv = inv(w);
    for (std::size_t j = i + 1; j < k; ++j) {
      Element x = gen(j);
      for (std::uint32_t t = 0; t < p; ++t) x = sigma[x];
      if (x != mul(mul(w_inv, gen(j)), w))
        throw InconsistentPresentation("power relation of " + gen_name(i) + " disagrees with the " +
                                       "conjugation action on " + gen_name(j));
    }

    // (g^a h)(g^b h') = g^{(a+b) mod p} [w if a+b >= p] sigma^b(h) h'.
    std::vector<std::vector<Element>> sigma_pow(p, std::vector<Element>(m));
    for (Element h = 0; h < m; ++h) sigma_pow[0][h] = h;
    for (std::uint32_t b = 1; b < p; ++b)
      for (Element h = 0; h < m; ++h) sigma_pow[b][h] = sigma[sigma_pow[b - 1][h]];

    const std::size_t n = std::size_t{p} * m;
    std::vector<Element> next(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint32_t a = static_cast<std::uint32_t>(x / m);
      const Element h = static_cast<Element>(x % m);
      for (std::size_t y = 0; y < n; ++y) {
        const std::uint32_t b = static_cast<std::uint32_t>(y / m);
        const Element h2 = static_cast<Element>(y % m);
        Element tail = mul(sigma_pow[b][h], h2);
        if (a + b >= p) tail = mul(w, tail);
        next[x * n + y] = static_cast<Element>(((a + b) % p) * m + tail);
      }
    }
    table = std::move(next);
  }
  return GroupTable::from_trusted(order, std::move(table), 0, pc.label);
}

PcPresentation pc_from_group(const GroupTable& g, std::vector<Element>* image) {
  const auto derived = derived_series(g);
  if (derived.terms.back().size() != 1)
    throw InputError("group is not solvable; no pc presentation exists");

  // Composition series top-down: S_0 = G > S_1 > ... > S_k = 1 with pc generators.
  std::vector<Subgroup> series;
  std::vector<Element> gens;
  for (std::size_t d = 0; d + 1 < derived.terms.size(); ++d) {
    const Subgroup& upper = derived.terms[d];
    Subgroup u = derived.terms[d + 1];
    std::vector<Subgroup> local;
    std::vector<Element> local_gens;
    while (u.size() < upper.size()) {
      Element y = 0;
      for (Element x : upper.elements())
        if (!u.contains(x)) {
          y = x;
          break;
        }
      const std::uint32_t o = order_modulo(g, y, u);
      std::uint32_t p = 2;
      while (o % p) ++p;
      const Element x = g.pow(y, o / p);
      std::vector<Element> seed = subgroup_generators(g, u);
      seed.push_back(x);
      u = subgroup_generated(g, seed);
      local.push_back(u);
      local_gens.push_back(x);
    }
    // local is bottom-up within this abelian section; prepend reversed.
    for (std::size_t t = local.size(); t-- > 0;) {
      series.push_back(local[t]);
      gens.push_back(local_gens[t]);
    }
  }
  const std::size_t k = gens.size();
  series.push_back(trivial_subgroup(g));

  PcPresentation pc;
  pc.label = g.label();
  pc.primes.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    pc.primes[i] = static_cast<std::uint32_t>(series[i].size() / series[i + 1].size());

  auto sift = [&](Element x) {
    PcWord w(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      // x in S_i; strip g_i^a so the remainder lies in S_{i+1}.
      const Element gi_inv = g.inv(gens[i]);
      std::uint32_t a = 0;
      while (!series[i + 1].contains(x)) {
        x = g.mul(gi_inv, x);
        ++a;
        if (a > pc.primes[i]) throw InternalError("pc sifting failed");
      }
      w[i] = a;
    }
    return w;
  };

  pc.powers.resize(k);
  pc.commutators.assign(k, std::vector<PcWord>(k, PcWord(k, 0)));
  for (std::size_t i = 0; i < k; ++i) {
    pc.powers[i] = sift(g.pow(gens[i], pc.primes[i]));
    for (std::size_t j = i + 1; j < k; ++j) pc.commutators[j][i] = sift(g.comm(gens[j], gens[i]));
  }
  if (image) {
    image->assign(g.order(), 0);
    for (Element x = 0; x < g.order(); ++x) (*image)[x] = pc_word_index(pc, sift(x));
  }
  return pc;
}

}  // namespace nested
