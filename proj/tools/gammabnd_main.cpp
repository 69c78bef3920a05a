#include "gammabnd/cli.hpp"

int main(int argc, char** argv) { return gammabnd::cli::run(argc, argv); }
