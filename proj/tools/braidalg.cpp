#include <iostream>

#include "braidalg/cli/job.hpp"

int main(int argc, char** argv) { return braidalg::cli::main_entry(argc, argv, std::cout, std::cerr); }
