#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "supervir/io.hpp"

namespace supervir {

struct CommandOptions {
  std::string command;
  std::string config_path;
  std::optional<std::string> window_path;
  std::vector<std::string> inputs;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
};

struct Report {
  std::string command;
  std::string status = "pass";  // pass | fail | error
  std::size_t checked = 0;
  std::size_t skipped = 0;
  Json violations = Json::array();
  Json details = Json::object();
  std::string summary;

  Json to_json() const;
  int exit_code() const { return status == "pass" ? 0 : status == "fail" ? 1 : 2; }
};

const std::vector<std::string>& command_names();

/// Runs one command. Input and config problems propagate as exceptions.
Report execute(const CommandOptions& opts);

/// execute() plus error capture, report file output and a text summary.
/// Returns the process exit code: 0 pass, 1 violations, 2 input/config error.
int run_command(const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace supervir
