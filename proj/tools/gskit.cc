#include <gskit/cli.hh>

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return static_cast<int>(gskit::run_cli(args, std::cin, std::cout, std::cerr));
}
