#include "eiskron/cli.hpp"

int main(int argc, char** argv) { return eiskron::cli::main(argc, argv); }
