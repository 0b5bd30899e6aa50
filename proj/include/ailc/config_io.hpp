#pragma once

#include <string>

#include "ailc/harness.hpp"

namespace ailc {

/// Parses and validates a JSON experiment config. Unknown keys are rejected
/// with a diagnostic naming the key; defaults fill anything omitted. The `M`
/// default depends on the mode: 1 for single_model, 10 for the multi-model
/// modes.
ExperimentConfig parse_config_text(const std::string& json_text);

/// Reads the file at `path` and parses it.
ExperimentConfig parse_config(const std::string& path);

/// Serializes back to the same schema parse_config accepts, so
/// parse_config_text(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

}  // namespace ailc
