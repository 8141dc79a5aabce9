#include "oddhole/cli.hpp"

int main(int argc, char** argv) { return oddhole::cli::run(argc, argv); }
