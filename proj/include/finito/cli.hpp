#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace finito::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInputError = 2;

struct Environment {
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  bool color = false;
  std::optional<std::size_t> max_points;  // FINITO_MAX_POINTS
  std::size_t threads = 1;
};

// args[0] is the program name.
int run(const std::vector<std::string>& args, const Environment& env);

}  // namespace finito::cli
