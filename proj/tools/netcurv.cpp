#include "netcurv/cli.hpp"

int main(int argc, char** argv) { return netcurv::run_cli(argc, argv); }
