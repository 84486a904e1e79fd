#include "regevo/cli.hpp"

int main(int argc, char** argv) { return regevo::run_cli(argc, argv); }
