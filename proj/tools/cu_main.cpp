#include "cusg/cli.hpp"

int main(int argc, char** argv) { return cusg::cli_main(argc, argv); }
