#include "cli.hpp"

int main(int argc, char** argv) { return orthoglide::tools::run_cli(argc, argv); }
