#include "cdid/cli.hpp"

int main(int argc, char** argv) { return cdid::cli_main(argc, argv); }
