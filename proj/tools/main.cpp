#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "finito/cli.hpp"

int main(int argc, char** argv) {
  finito::cli::Environment env;
  env.in = &std::cin;
  env.out = &std::cout;
  env.err = &std::cerr;
  env.color = isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
  if (const char* cap = std::getenv("FINITO_MAX_POINTS")) {
    try {
      env.max_points = std::stoul(cap);
    } catch (const std::exception&) {
      std::cerr << "error: FINITO_MAX_POINTS must be a positive integer\n";
      return finito::cli::kExitInputError;
    }
  }
  env.threads = std::max(1u, std::thread::hardware_concurrency());
  return finito::cli::run(std::vector<std::string>(argv, argv + argc), env);
}
