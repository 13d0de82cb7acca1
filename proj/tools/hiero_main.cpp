#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "hiero/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        hiero::CommandResult result = hiero::dispatch(args);
        if (!result.output.empty()) std::cout << result.output;
        if (!result.error_message.empty()) std::cerr << result.error_message << "\n";
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
