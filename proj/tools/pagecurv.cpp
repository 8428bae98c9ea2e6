#include <iostream>

#include "pagecurv_cli/app.hpp"

int main(int argc, char** argv) {
  return pagecurv::cli::run_cli(argc, argv, std::cout, std::cerr);
}
