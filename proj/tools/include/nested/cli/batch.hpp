#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace nested::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kCapExceeded = 3 };

struct Input {
  std::string label;
  std::filesystem::path path;
};

/// Directories expand to their corpus entries; files are read for their
/// header label. The result is sorted by label.
std::vector<Input> expand_inputs(const std::vector<std::string>& paths);

struct Outcome {
  std::string output;
  std::string error;
  int code = kOk;
};

/// Runs `work` over the inputs on `jobs` threads. Outcomes come back in input
/// order regardless of completion order; exceptions map to exit codes.
std::vector<Outcome> run_ordered(const std::vector<Input>& inputs, std::size_t jobs,
                                 const std::function<Outcome(const Input&)>& work);

}  // namespace nested::cli
