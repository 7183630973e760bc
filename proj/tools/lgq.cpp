#include "lgq/cli.hpp"

int main(int argc, char** argv) { return lgq::cli::run_command(argc, argv); }
