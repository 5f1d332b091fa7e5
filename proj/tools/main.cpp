#include "antsim/cli.hpp"

int main(int argc, char** argv) { return antsim::cli_main(argc, argv); }
