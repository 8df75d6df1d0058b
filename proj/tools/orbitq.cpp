#include "orbitq/cli.hpp"

int main(int argc, char** argv) { return orbitq::run_cli(argc, argv); }
