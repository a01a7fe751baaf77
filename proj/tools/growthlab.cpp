#include "growthlab/cli.hpp"

int main(int argc, char** argv) { return growthlab::cli::main(argc, argv); }
