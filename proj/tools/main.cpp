#include "starcover/cli.hpp"

int main(int argc, char** argv) { return starcover::cli_main(argc, argv); }
