#pragma once

// Brute-force oracles used across the test binaries. Nothing here calls the
// library's own algorithms for the quantity being checked.

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nested/chartable.hpp"
#include "nested/group.hpp"

namespace oracle {

using nested::Element;
using nested::GroupTable;

inline std::filesystem::path corpus_dir() { return NESTED_CORPUS_DIR; }

using Set = std::set<Element>;

inline Set to_set(const nested::Subgroup& s) {
  auto e = s.elements();
  return {e.begin(), e.end()};
}

// Groups from permutations, with composition (a*b)(x) = b(a(x)).
inline GroupTable permutation_group(const std::vector<std::vector<unsigned>>& gens,
                                    const std::string& label) {
  using Perm = std::vector<unsigned>;
  const std::size_t deg = gens.front().size();
  Perm id(deg);
  for (unsigned i = 0; i < deg; ++i) id[i] = i;
  std::vector<Perm> elems{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : gens) {
      Perm q(deg);
      for (unsigned x = 0; x < deg; ++x) q[x] = g[elems[k][x]];
      if (index.emplace(q, static_cast<Element>(elems.size())).second) elems.push_back(q);
    }
  }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Perm q(deg);
      for (unsigned x = 0; x < deg; ++x) q[x] = elems[b][elems[a][x]];
      table[a * n + b] = index.at(q);
    }
  }
  return GroupTable::from_cayley(n, std::move(table), label);
}

inline GroupTable s3() { return permutation_group({{1, 0, 2}, {1, 2, 0}}, "S3"); }
inline GroupTable a4() { return permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"); }
inline GroupTable a5() {
  return permutation_group({{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}, "A5");
}

// Z/n under addition.
inline GroupTable cyclic(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return GroupTable::from_cayley(n, std::move(t), "C" + std::to_string(n));
}

inline Set center(const GroupTable& g) {
  Set z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.insert(x);
  }
  return z;
}

inline Set closure(const GroupTable& g, Set s) {
  s.insert(g.identity());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (Element a : cur)
      for (Element b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

inline Set normal_closure(const GroupTable& g, const Set& seed) {
  Set conj;
  for (Element x : seed)
    for (Element t = 0; t < g.order(); ++t) conj.insert(g.conj(x, t));
  return closure(g, conj);
}

inline Set commutators(const GroupTable& g, const Set& h, const Set& k) {
  Set c;
  for (Element a : h)
    for (Element b : k) c.insert(g.comm(a, b));
  return closure(g, c);
}

inline Set all(const GroupTable& g) {
  Set s;
  for (Element x = 0; x < g.order(); ++x) s.insert(x);
  return s;
}

inline bool is_normal(const GroupTable& g, const Set& n) {
  for (Element x : n)
    for (Element t = 0; t < g.order(); ++t)
      if (!n.count(g.conj(x, t))) return false;
  return true;
}

// Conjugacy classes by orbit sweep.
inline std::vector<Set> classes(const GroupTable& g) {
  std::vector<Set> out;
  std::vector<bool> seen(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    Set c;
    for (Element t = 0; t < g.order(); ++t) c.insert(g.conj(x, t));
    for (Element y : c) seen[y] = true;
    out.push_back(c);
  }
  return out;
}

// All normal subgroups: every normal subgroup is a union of classes, so grow
// unions class by class and keep the closed ones.
inline std::set<Set> normal_subgroups(const GroupTable& g) {
  const auto cls = classes(g);
  std::set<Set> found{{g.identity()}};
  std::vector<Set> frontier{{g.identity()}};
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& n : frontier) {
      for (const auto& c : cls) {
        if (n.count(*c.begin())) continue;
        Set seed = n;
        seed.insert(c.begin(), c.end());
        Set m = closure(g, seed);
        if (found.insert(m).second) next.push_back(m);
      }
    }
    frontier = std::move(next);
  }
  return found;
}

inline std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Complex value of a table entry: sum over (k, m) of m * exp(2 pi i k / e).
inline std::complex<double> value(const nested::CharacterTable& t, std::size_t i, std::size_t c) {
  std::complex<double> z = 0;
  const double e = t.exponent();
  for (auto [k, m] : t.value(i, c))
    z += static_cast<double>(m) * std::polar(1.0, 2 * std::numbers::pi * k / e);
  return z;
}

// Kernel and center of a character read from complex values.
inline Set kernel(const nested::CharacterTable& t, std::size_t i) {
  Set k;
  for (std::size_t c = 0; c < t.classes().count(); ++c)
    if (std::abs(value(t, i, c) - static_cast<double>(t.degree(i))) < 1e-6)
      for (Element x : t.classes().members[c]) k.insert(x);
  return k;
}

inline Set center(const nested::CharacterTable& t, std::size_t i) {
  Set z;
  for (std::size_t c = 0; c < t.classes().count(); ++c)
    if (std::abs(std::abs(value(t, i, c)) - static_cast<double>(t.degree(i))) < 1e-6)
      for (Element x : t.classes().members[c]) z.insert(x);
  return z;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct OracleRow {
  std::string label;
  unsigned nilclass = 0;
  std::size_t nclasses = 0;
  bool nested = false, nbd = false, strict = false, gvz = false;
  std::vector<std::uint32_t> degrees;
};

// ORACLE.txt columns: label class nclasses nested nbd strict gvz degrees.
inline std::vector<OracleRow> read_oracle(const std::filesystem::path& p) {
  std::vector<OracleRow> rows;
  std::istringstream in(slurp(p));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    OracleRow r;
    std::string a, b, c, d, degs;
    ls >> r.label >> r.nilclass >> r.nclasses >> a >> b >> c >> d >> degs;
    r.nested = a == "true", r.nbd = b == "true", r.strict = c == "true", r.gvz = d == "true";
    std::replace(degs.begin(), degs.end(), ',', ' ');
    std::istringstream ds(degs);
    for (std::uint32_t v; ds >> v;) r.degrees.push_back(v);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace oracle
