#include "polymaj/cli_app.hpp"

int main(int argc, char* argv[]) { return polymaj::cli::run(argc, argv); }
