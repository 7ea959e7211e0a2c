#include <iostream>

#include "ncsg/session.hpp"

int main(int argc, char** argv) { return ncsg::cli_dispatch(argc, argv, std::cout, std::cerr); }
