#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nfkit::cli {

enum class Command { Resonances, PdnfBasis, Centralizer, Normalizer, Invariants, Reduce, Jacobi, Classify3, Check };
enum class Format { Json, Text };

struct RunConfig {
  Command command = Command::Check;
  std::string spectrum;
  std::string field;
  std::string g;       // normalizer: optional candidate pair
  std::string lambda;
  std::optional<int> max_degree;
  std::optional<int> truncate;
  std::optional<int> r_min;
  std::optional<int> r_max;
  int search_bound = 12;
  int cap = 8;  // ladder cap
  std::vector<long> triple;
  Format format = Format::Json;
};

// 0 on success, 2 on validation errors, 3 on scope errors, 1 on internal failures.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nfkit::cli
