#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wedgegroup/serialization.hpp"

namespace wg {

enum class CommandStatus { Ok, Fail, Error };

const char* to_string(CommandStatus s);

struct CommandResult {
  CommandStatus status = CommandStatus::Ok;
  Json payload = Json::object();
  std::vector<std::string> diagnostics;

  int exit_code() const;
  Json to_json() const;
};

/// Entry point of the `wedgegroup` tool. The JSON result goes to `out`,
/// timing and usage text to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wg
