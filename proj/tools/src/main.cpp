#include "cli_app.hpp"

#include <iostream>

int main(int argc, char** argv) { return eafc::cli::run(argc, argv, std::cout, std::cerr); }
