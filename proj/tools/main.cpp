#include <iostream>

#include "cli/app.hpp"

int main(int argc, char** argv) {
  return cy4gv::cli::run_app(argc, argv, CY4GV_FIXTURE_DIR, std::cout, std::cerr);
}
