#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "cascade/commands.hpp"
#include "cascade/config.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  cascade::RunConfig config;
  try {
    config = cascade::parse_config(args, cascade::cascade_environment());
  } catch (const cascade::HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const cascade::UsageError& e) {
    std::cerr << "cascade: " << e.what() << "\nrun 'cascade --help' for usage\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cascade: " << e.what() << '\n';
    return 3;
  }

  try {
    return cascade::run_command(config, std::cout, std::cerr);
  } catch (const cascade::UsageError& e) {
    std::cerr << "cascade: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cascade: " << e.what() << '\n';
    return 3;
  }
}
