#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmkit/json_io.hpp"

namespace cmkit::cli {

struct Options {
  std::string command;
  std::optional<std::string> field;  // overrides the document's "field"
  double tolerance = Field<Complex>::default_tolerance;
  std::string convention = "std";
  std::size_t max_len = 3;
  std::optional<int> degree;
  std::size_t n = 3;
  std::uint64_t seed = 0;
  int twist = 0;
  std::optional<int> cutoff;
  std::optional<json> homotopy;  // contents of --h
  bool batch = false;
};

struct Report {
  std::string command;
  json flags = json::object();
  std::string input_digest;
  std::string status = "ok";  // ok | infeasible | error
  json result = json::object();
  std::vector<std::string> messages;

  int exit_code() const { return status == "ok" ? 0 : status == "infeasible" ? 1 : 2; }
  json to_json() const;
};

std::string fnv1a64(std::string_view bytes);

/// Runs one command on one input document (nullopt for commands that take no
/// input). Never throws; failures are reported with status "error".
Report run(const Options& opts, const std::optional<std::string>& input);

/// Runs every nonblank line independently, in parallel; reports come back in
/// input order.
std::vector<Report> run_batch(const Options& opts, const std::vector<std::string>& lines, unsigned threads = 0);

/// Full command line entry point; returns the process exit code.
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cmkit::cli
