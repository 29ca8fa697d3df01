#include "slenderlab/cli/app.hpp"

int main(int argc, char** argv) { return slenderlab::cli::run(argc, argv); }
