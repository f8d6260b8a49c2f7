#include "cli.hpp"

int main(int argc, char** argv) { return ocnr::cli::run(argc, argv); }
