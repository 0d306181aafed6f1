#include <cstdio>
#include <string>
#include <vector>

#include "outf3/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    outf3::cli::CommandOutcome outcome = outf3::cli::execute(args);
    std::fputs(outcome.text.c_str(), outcome.exit_code == 2 ? stderr : stdout);
    return outcome.exit_code;
}
