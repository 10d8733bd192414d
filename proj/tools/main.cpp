#include "cli.hpp"

int main(int argc, char** argv) { return specnet::cli::run_cli(argc, argv); }
