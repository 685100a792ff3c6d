#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtl/config.hpp"

namespace mtl {

struct RunOptions {
  bool json = false;
  bool dot = false;
};

struct RunResult {
  /// 0 when every requested check passed, 1 otherwise.
  int status = 0;
  std::string summary;
  /// (file name, contents), written by write_outputs.
  std::vector<std::pair<std::string, std::string>> files;
};

/// One of growth, peripheral, suspend, verify.  Library errors propagate.
RunResult run_command(std::string_view command, const JobConfig& config,
                      const RunOptions& options);

/// Writes every file through a temporary name and a rename.
void write_outputs(const std::filesystem::path& dir, const RunResult& result);

}  // namespace mtl
