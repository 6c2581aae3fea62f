#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) {
  locnil::cli::RunConfig config;
  int code = 0;
  if (!locnil::cli::parse_args(argc, argv, config, code, std::cout, std::cerr)) return code;
  return locnil::cli::run(config, std::cout, std::cerr);
}
