#pragma once

#include <stdexcept>
#include <string>

namespace ailc {

/// Bad user-facing configuration: unknown plant name, out-of-range knob,
/// malformed config file. Maps to exit code 2 in the CLI.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke an API precondition (dimension mismatch, missing samples,
/// querying future data). These are programming errors, not inputs.
class ContractViolation : public std::logic_error {
public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// A runtime invariant of the algorithm failed during a simulation.
/// Carries the (iteration, sample, model) coordinates of the breach.
class InvariantViolation : public std::runtime_error {
public:
  InvariantViolation(std::string kind, int k, int t, int j, const std::string& detail)
      : std::runtime_error("invariant '" + kind + "' violated at (k=" + std::to_string(k) +
                           ", t=" + std::to_string(t) + ", j=" + std::to_string(j) + "): " + detail),
        kind_(std::move(kind)), k_(k), t_(t), j_(j) {}

  const std::string& kind() const { return kind_; }
  int iteration() const { return k_; }
  int sample() const { return t_; }
  int model() const { return j_; }

private:
  std::string kind_;
  int k_;
  int t_;
  int j_;
};

/// Filesystem failure while emitting outputs. Maps to exit code 4 in the CLI.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ailc
