#include "cmapf/cli.hpp"

int main(int argc, char** argv) { return cmapf::cli_run(argc, argv); }
