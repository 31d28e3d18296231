#include <iostream>

#include "cli_report.hpp"

int main(int argc, char** argv) { return sausage4::cli::run(argc, argv, std::cout, std::cerr); }
