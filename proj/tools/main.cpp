#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::map<std::string, std::string> env;
    for (const char *name : {"TREECALC_MAX_DEGREE", "TREECALC_ORDER"}) {
        if (const char *value = std::getenv(name)) {
            env[name] = value;
        }
    }
    return treecalc::cli::run(args, std::cout, std::cerr, env);
}
