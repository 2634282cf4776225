#include "cli.hpp"

int main(int argc, char** argv)
{
    return listpack::cli::run(argc, argv);
}
