#include "cli.hpp"

int main(int argc, char** argv) { return hsum::cli::main(argc, argv); }
