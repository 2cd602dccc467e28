#include "heuntra/cli.hpp"

int main(int argc, char** argv) { return heuntra::run_cli(argc, argv); }
