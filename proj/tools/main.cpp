#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  mfa::cli::RunConfig cfg;
  try {
    cfg = mfa::cli::parse_config(argc, argv);
  } catch (const mfa::cli::UsageError& e) {
    (e.code() == 0 ? std::cout : std::cerr) << e.what() << '\n';
    return e.code();
  }
  return mfa::cli::run(cfg, std::cout, std::cerr);
}
