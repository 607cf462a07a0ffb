#include "covermonoid/cli.hpp"

int main(int argc, char** argv) { return covermonoid::run_cli(argc, argv); }
