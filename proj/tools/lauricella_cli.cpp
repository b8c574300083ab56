#include "lauricella/cli.hpp"

int main(int argc, char** argv) { return lauricella::cli::main(argc, argv); }
