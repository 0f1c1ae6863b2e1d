#include "goedel/cli.hpp"

int main(int argc, char** argv) { return goedel::run(argc, argv); }
