#include "skia/cli.hpp"

int main(int argc, char** argv) { return skia::cli::run(argc, argv); }
