#include "cyclo3/cli.hpp"

int main(int argc, char** argv) { return cyclo3::cli::main_with_args(argc, argv); }
