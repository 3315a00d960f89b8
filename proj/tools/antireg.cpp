#include "antireg/cli.hpp"

int main(int argc, char** argv) { return antireg::run_cli(argc, argv); }
