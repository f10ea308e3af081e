#include "judicious/cli.hpp"

int main(int argc, char** argv) { return judicious::cli_main(argc, argv); }
