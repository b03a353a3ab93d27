#include "commands.hpp"

int main(int argc, char** argv) { return franel::cli::run(argc, argv); }
