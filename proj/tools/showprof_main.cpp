#include "showprof/cli.hpp"

int main(int argc, char** argv) {
    return showprof::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
