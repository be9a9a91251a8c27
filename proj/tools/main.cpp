#include "agrifleet/cli.hpp"

int main(int argc, char** argv) { return agrifleet::cli::run(argc, argv); }
