#include "nested/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "nested/error.hpp"

namespace nested {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      std::size_t end = pos;
      while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end]))) ++end;
      if (end > pos) line.tokens.push_back(raw.substr(pos, end - pos));
      pos = end;
    }
    if (line.tokens.empty() || line.tokens[0].front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw InputError("expected a nonnegative integer, got '" + std::string(tok) + "'", line);
  return v;
}

std::string join_label(const Line& header, std::size_t from) {
  std::string label;
  for (std::size_t i = from; i < header.tokens.size(); ++i) {
    if (!label.empty()) label += ' ';
    label += header.tokens[i];
  }
  return label;
}

}  // namespace

GroupTable parse_cayley(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty input", 1);
  const Line& header = lines[0];
  if (header.tokens[0] != "cayley" || header.tokens.size() < 2)
    throw InputError("expected header 'cayley <n> <label>'", header.number);
  const std::size_t n = to_uint(header.tokens[1], header.number);
  if (n == 0) throw InputError("group order must be positive", header.number);
  if (n > kMaxTableOrder) throw CapExceeded("cayley table", n, kMaxTableOrder);
  if (lines.size() < n + 1) {
    const std::size_t at = lines.size() > 1 ? lines.back().number + 1 : header.number + 1;
    throw InputError("expected " + std::to_string(n) + " table rows, found " +
                         std::to_string(lines.size() - 1),
                     at);
  }
  if (lines.size() > n + 1) throw InputError("unexpected trailing data", lines[n + 1].number);
  std::vector<Element> product;
  product.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const Line& line = lines[r + 1];
    if (line.tokens.size() != n)
      throw InputError("row has " + std::to_string(line.tokens.size()) + " entries, expected " +
                           std::to_string(n),
                       line.number);
    for (auto tok : line.tokens) {
      const auto v = to_uint(tok, line.number);
      if (v >= n) throw InputError("entry " + std::to_string(v) + " out of range", line.number);
      product.push_back(static_cast<Element>(v));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (product[x] != x) throw InputError("element 0 is not the identity", lines[1].number);
    if (product[x * n] != x) throw InputError("element 0 is not the identity", lines[1 + x].number);
  }
  try {
    return GroupTable::from_cayley(n, std::move(product), join_label(header, 2));
  } catch (const InputError& err) {
    throw InputError(err.what(), header.number);
  }
}

PcPresentation parse_pc(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty input", 1);
  const Line& header = lines[0];
  if (header.tokens[0] != "pc" || header.tokens.size() < 2)
    throw InputError("expected header 'pc <k> <label>'", header.number);
  const std::size_t k = to_uint(header.tokens[1], header.number);
  if (k > 64) throw InputError("too many generators", header.number);
  const std::size_t expected = 1 + k + k * (k - (k ? 1 : 0)) / 2;
  if (lines.size() != expected) {
    const std::size_t at = lines.size() < expected ? (lines.back().number + 1) : lines[expected].number;
    throw InputError("expected " + std::to_string(expected - 1) + " relation lines, found " +
                         std::to_string(lines.size() - 1),
                     at);
  }
  PcPresentation pc = PcPresentation::free_abelian_like(std::vector<std::uint32_t>(k, 0),
                                                        join_label(header, 2));
  auto read_word = [&](const Line& line, std::size_t from) {
    PcWord w(k);
    for (std::size_t t = 0; t < k; ++t) w[t] = static_cast<std::uint32_t>(to_uint(line.tokens[from + t], line.number));
    return w;
  };
  for (std::size_t i = 0; i < k; ++i) {
    const Line& line = lines[1 + i];
    if (line.tokens.size() != k + 1)
      throw InputError("power line needs " + std::to_string(k + 1) + " fields", line.number);
    pc.primes[i] = static_cast<std::uint32_t>(to_uint(line.tokens[0], line.number));
    pc.powers[i] = read_word(line, 1);
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t l = 1 + k; l < lines.size(); ++l) {
    const Line& line = lines[l];
    if (line.tokens.size() != k + 2)
      throw InputError("commutator line needs " + std::to_string(k + 2) + " fields", line.number);
    const std::size_t j = to_uint(line.tokens[0], line.number);
    const std::size_t i = to_uint(line.tokens[1], line.number);
    if (i < 1 || j <= i || j > k)
      throw InputError("commutator indices must satisfy 1 <= i < j <= k", line.number);
    if (!seen.emplace(j, i).second)
      throw InputError("duplicate commutator [g" + std::to_string(j) + ",g" + std::to_string(i) + "]",
                       line.number);
    pc.commutators[j - 1][i - 1] = read_word(line, 2);
  }
  // Range checks happen here so they carry line numbers; consistency is
  // checked when the table is built.
  for (std::size_t i = 0; i < k; ++i) {
    const Line& line = lines[1 + i];
    for (std::size_t t = 0; t < k; ++t)
      if (pc.primes[t] != 0 && pc.powers[i][t] >= pc.primes[t])
        throw InputError("exponent out of range for relative order", line.number);
  }
  return pc;
}

std::string write_cayley(const GroupTable& g) {
  if (g.identity() != 0) throw InputError("cayley export requires element 0 to be the identity");
  std::ostringstream os;
  os << "cayley " << g.order();
  if (!g.label().empty()) os << ' ' << g.label();
  os << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
    os << '\n';
  }
  return os.str();
}

std::string write_pc(const PcPresentation& pc) {
  std::ostringstream os;
  const std::size_t k = pc.rank();
  os << "pc " << k;
  if (!pc.label.empty()) os << ' ' << pc.label;
  os << '\n';
  for (std::size_t i = 0; i < k; ++i) {
    os << pc.primes[i];
    for (auto e : pc.powers[i]) os << ' ' << e;
    os << '\n';
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      os << j + 1 << ' ' << i + 1;
      for (auto e : pc.commutators[j][i]) os << ' ' << e;
      os << '\n';
    }
  return os.str();
}

GroupTable parse_group(std::string_view text, std::size_t order_cap) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty input", 1);
  const auto kind = lines[0].tokens[0];
  if (kind == "cayley") {
    auto g = parse_cayley(text);
    if (g.order() > order_cap) throw CapExceeded("cayley table", g.order(), order_cap);
    return g;
  }
  if (kind == "pc") return build_from_pc(parse_pc(text), order_cap);
  throw InputError("unknown format tag '" + std::string(kind) + "'", lines[0].number);
}

GroupTable load_group(const std::filesystem::path& path, std::size_t order_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_group(buf.str(), order_cap);
  } catch (const CapExceeded&) {
    throw;
  } catch (const InconsistentPresentation& err) {
    throw InconsistentPresentation(path.string() + ": " + err.what());
  } catch (const InputError& err) {
    throw InputError(path.string() + ": " + err.what());
  }
}

bool label_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

std::vector<CorpusEntry> list_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError(dir.string() + " is not a directory");
  std::vector<CorpusEntry> out;
  for (const auto& de : std::filesystem::directory_iterator(dir)) {
    if (!de.is_regular_file()) continue;
    const auto ext = de.path().extension().string();
    GroupFormat fmt;
    if (ext == ".pc") fmt = GroupFormat::Pc;
    else if (ext == ".cayley") fmt = GroupFormat::Cayley;
    else continue;
    std::ifstream in(de.path());
    std::string first;
    while (std::getline(in, first) && (first.empty() || first[0] == '#')) {}
    std::istringstream hs(first);
    std::string tag, count, label;
    hs >> tag >> count;
    std::getline(hs >> std::ws, label);
    if (label.empty()) label = de.path().stem().string();
    out.push_back({label, fmt, de.path()});
  }
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    if (a.label != b.label) return label_less(a.label, b.label);
    return a.path < b.path;
  });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].label == out[i - 1].label)
      throw InputError("duplicate corpus label '" + out[i].label + "' in " + dir.string());
  return out;
}

}  // namespace nested
