#include <string>
#include <vector>

#include "diskclique/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return diskclique::run_cli(args);
}
