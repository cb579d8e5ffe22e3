#include "seqstate/cli.hpp"

int main(int argc, char** argv) { return seqstate::cli::run(argc, argv); }
