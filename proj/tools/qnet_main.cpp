#include "qnet/commands.hpp"

int main(int argc, char** argv) { return qnet::run_cli(argc, argv); }
