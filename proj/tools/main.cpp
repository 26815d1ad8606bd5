#include "cli.hpp"

int main(int argc, char** argv) { return statmc::cli::run(argc, argv); }
