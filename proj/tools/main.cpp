#include "gauram/cli.hpp"

int main(int argc, char** argv) { return gauram::cli::run(argc, argv); }
