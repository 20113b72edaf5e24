#include "nested/cli/batch.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "nested/error.hpp"
#include "nested/io.hpp"

namespace nested::cli {

std::vector<Input> expand_inputs(const std::vector<std::string>& paths) {
  std::vector<Input> out;
  for (const auto& p : paths) {
    std::filesystem::path path(p);
    if (std::filesystem::is_directory(path)) {
      for (auto& e : list_corpus(path)) out.push_back({e.label, e.path});
      continue;
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + p + "'");
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    std::string tag, count, label;
    hs >> tag >> count >> label;
    out.push_back({label.empty() ? path.stem().string() : label, path});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Input& a, const Input& b) { return label_less(a.label, b.label); });
  return out;
}

std::vector<Outcome> run_ordered(const std::vector<Input>& inputs, std::size_t jobs,
                                 const std::function<Outcome(const Input&)>& work) {
  std::vector<Outcome> out(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < inputs.size();) {
      try {
        out[i] = work(inputs[i]);
      } catch (const CapExceeded& e) {
        out[i] = {{}, inputs[i].label + ": " + e.what(), kCapExceeded};
      } catch (const std::exception& e) {
        out[i] = {{}, inputs[i].label + ": " + e.what(), kInputError};
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, inputs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace nested::cli
