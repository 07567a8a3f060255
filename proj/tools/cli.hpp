#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "mfa/geometry1d.hpp"
#include "mfa/io.hpp"
#include "mfa/spectrum.hpp"

namespace mfa::cli {

enum class Command {
  Spectrum,
  AssouadWord,
  Greedy,
  Moran,
  Ball,
  DoublingScan,
  AssouadScan,
  Witness,
  Abundance,
};

struct RunConfig {
  Command command = Command::Spectrum;
  std::filesystem::path system;
  std::optional<std::filesystem::path> output;
  std::uint64_t seed = 0;
  TableFormat format = TableFormat::Csv;

  QGrid q_grid{-10.0, 10.0, 201};
  double x = 0.0;
  double r = 0.0;
  double tol = kBallTolerance;
  double alpha = 0.0;
  double epsilon = 0.05;
  std::size_t n = 16;
  std::size_t stages = 20;
  std::string word;    // explicit prefix for assouad-word
  std::string period;  // repeated after the prefix when set
  std::size_t length = 10000;
  std::size_t n_lo = 1;
  std::size_t n_hi = 1000;
  std::size_t step = 1;
  ScaleGrid scales{2.0, 1, 40};
  double gamma = 2.0;
  std::size_t depth_cap = kDepthCap;
  double n_target = 4.0;
  std::string kappa;
  double delta = 0.1;
  std::size_t pair_budget = 20;
};

/// Bad command line. code() is 2, or 0 when help was requested.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& what, int code) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

/// "lo:hi:count".
QGrid parse_q_grid(const std::string& text);
/// "base^(-k),k=k0..k1".
ScaleGrid parse_scale_grid(const std::string& text);
/// "lo:hi" or "lo:hi:step".
void parse_windows(const std::string& text, RunConfig& cfg);

RunConfig parse_config(int argc, const char* const* argv);

/// Writes to cfg.output or `out`; errors go to `err`. Returns the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace mfa::cli
