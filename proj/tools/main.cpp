#include "linembed/cli.hpp"

int main(int argc, char** argv) { return linembed::cli_main(argc, argv); }
