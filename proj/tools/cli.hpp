#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace cellstrat::cli {

enum class Status { Ok = 0, ValidationFailed = 1, InputError = 2, InternalError = 3 };

struct CommandResult {
  Status status = Status::Ok;
  nlohmann::json payload;
  std::string text;
};

/// Runs one command line (without the program name). `input` backs "-" paths.
CommandResult execute(const std::vector<std::string>& args, std::istream& input);

/// execute() plus rendering per --format/--out; returns the exit code.
int run(const std::vector<std::string>& args, std::istream& input, std::ostream& out, std::ostream& err);

}  // namespace cellstrat::cli
