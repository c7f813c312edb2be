#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace eiskron::cli {

enum class Format { Json, Csv };

struct JobConfig {
  std::string command;
  unsigned long long p = 5;
  int N = 3;
  int k = 1;
  std::optional<long long> r;
  std::size_t q_prec = 20;
  int p_prec = 6;
  std::string g = "1,0;0,1";
  /// Without a file, verify-main-theorem and verify-suite sweep the delta
  /// basis; the other commands need one.
  std::optional<std::string> phi_path;
  std::string transform = "p1";
  Format format = Format::Json;
  std::optional<std::string> out_path;
};

/// 0 success/pass, 1 verification failure, 2 configuration error.
/// The artifact goes to `out` unless config.out_path is set; diagnostics go to `err`.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// argv front end (CLI11).
int main(int argc, char** argv);

}  // namespace eiskron::cli
