#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regevo/gp_config.hpp"
#include "regevo/hybrid.hpp"

namespace regevo {

struct RunConfig {
  std::string corpus;
  std::vector<std::string> categories;  // empty means every category
  GpConfig gp;
  HybridConfig hybrid;
  double feature_threshold = 0.01;
  double split_ratio = 0.8;
  std::string output_dir;
  std::uint64_t seed = 0;
  bool lowercase = true;

  // Throws UsageError on out-of-range values.
  void validate() const;
};

// Reads a JSON config. Relative paths inside are resolved against the
// config file's directory. Unknown keys and out-of-range values are
// rejected with UsageError.
RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& json_text, const std::string& base_dir = "");

// Exit codes: 0 success, 1 runtime error, 2 usage or config error.
int run_cli(int argc, char** argv);
int run_cli(const std::vector<std::string>& args);

}  // namespace regevo
