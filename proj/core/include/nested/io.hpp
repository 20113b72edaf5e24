#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nested/group.hpp"
#include "nested/pc.hpp"

namespace nested {

enum class GroupFormat { Cayley, Pc };

/// "cayley <n> <label>" followed by n rows of n indices; element 0 must be
/// the identity. Errors carry 1-based line numbers.
GroupTable parse_cayley(std::string_view text);

/// "pc <k> <label>", then k lines "<p> <e_1..e_k>" (relative order and power
/// word), then one line "<j> <i> <e_1..e_k>" per pair j > i (1-based) giving
/// [g_j, g_i]. Blank lines and lines starting with '#' are ignored.
PcPresentation parse_pc(std::string_view text);

std::string write_cayley(const GroupTable& g);
std::string write_pc(const PcPresentation& pc);

struct CorpusEntry {
  std::string label;
  GroupFormat format;
  std::filesystem::path path;
};

/// Reads and builds one group file, dispatching on its header keyword.
GroupTable load_group(const std::filesystem::path& path, std::size_t order_cap = kMaxTableOrder);
GroupTable parse_group(std::string_view text, std::size_t order_cap = kMaxTableOrder);

/// The .pc and .cayley files of a directory, sorted by label (numeric runs
/// compare as numbers, so 32.9 < 32.10). Labels come from the file headers
/// and must be unique; other files are ignored.
std::vector<CorpusEntry> list_corpus(const std::filesystem::path& dir);

/// Numeric-aware label comparison used for every report ordering.
bool label_less(std::string_view a, std::string_view b);

}  // namespace nested
