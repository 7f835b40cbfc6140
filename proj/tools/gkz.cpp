#include "gkz/cli.hpp"

int main(int argc, char** argv) { return gkz::cli::run(argc, argv); }
