#include "tsrg/cli.hpp"

int main(int argc, char** argv) { return tsrg::run_cli(argc, argv); }
