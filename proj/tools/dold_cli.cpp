#include "dold/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return dold::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
