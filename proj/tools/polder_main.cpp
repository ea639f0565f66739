#include "polder/cli.hpp"

int main(int argc, char** argv) { return polder::run_cli(argc, argv); }
