#include <fatpoints/cli.hpp>

int main(int argc, char** argv) { return fatpoints::cli::run(argc, argv); }
