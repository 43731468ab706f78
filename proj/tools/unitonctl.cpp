#include <iostream>

#include "uniton/io/commands.hpp"

int main(int argc, char** argv) { return uniton::run_cli(argc, argv, std::cout, std::cerr); }
