#include <string>
#include <vector>

#include "mcs/cli.hpp"

int main(int argc, char** argv) {
    return mcs::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
