#include "pfaff/cli.hpp"

int main(int argc, char** argv) { return pfaff::cli_main(argc, argv); }
