#include "fsqm/cli/app.hpp"

int main(int argc, char** argv) { return fsqm::cli::run_cli(argc, argv); }
