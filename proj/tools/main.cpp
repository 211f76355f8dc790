#include "projconst/cli.hpp"

int main(int argc, char** argv) { return projconst::cli::run(argc, argv); }
