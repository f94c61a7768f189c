#include "sprs/cli.hpp"

int main(int argc, char** argv) { return sprs::cli_main(argc, argv); }
