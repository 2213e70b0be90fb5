#include "commands.hpp"

int main(int argc, char** argv) { return rookalg::cli::run(argc, argv); }
