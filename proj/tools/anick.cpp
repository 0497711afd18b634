#include <anick/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
  return anick::cli::run(argc, argv, std::cout, std::cerr);
}
