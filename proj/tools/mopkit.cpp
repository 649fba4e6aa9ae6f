#include "mop/cli.hpp"

int main(int argc, char** argv) { return mop::run_cli(argc, argv); }
