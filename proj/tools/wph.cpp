#include <wph/cli.hpp>

int main(int argc, char** argv) { return wph::cli::run(argc, argv); }
