#include "subdiv/cli.hpp"

int main(int argc, char** argv) { return subdiv::run_cli(argc, argv); }
