#include <CLI11.hpp>
#include <iostream>

#include "sacf/dynamics.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Super-Apollonian continued fraction toolkit"};
    app.set_version_flag("--version", std::string("sacf ") + SACF_GIT_REV);
    CLI11_PARSE(app, argc, argv);
    std::cout << "see --help\n";
    return 0;
}
