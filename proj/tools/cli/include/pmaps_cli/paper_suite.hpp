#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "pmaps/group_input.hpp"

namespace pmaps::cli {

struct ExampleResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Names of the shipped corpus maps, in suite order.
const std::vector<std::string>& corpus_examples();

/// Loads `<corpus_dir>/<name>.grp` for every corpus example and checks its
/// pinned values. Errors inside an example are reported as failures.
std::vector<ExampleResult> run_paper_suite(const std::filesystem::path& corpus_dir,
                                           const RealizeOptions& options = {});

}  // namespace pmaps::cli
