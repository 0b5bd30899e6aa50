#pragma once

#include <string>

#include "ailc/harness.hpp"

namespace ailc {

/// Renders a double with 17 significant digits, enough to round-trip any
/// 64-bit value losslessly.
std::string format_float17(double v);

/// Per-iteration summary CSV. Header is exactly
/// `k,max_track_err,max_ident_err,j_star_mode`; one row per iteration,
/// LF line endings, no trailing whitespace. `j_star_mode` is the most
/// frequent selected model of the iteration (1-based, ties to the lowest).
std::string summary_csv(const ExperimentReport& report);

/// Per-step trace CSV with header `k,t,x,x_m,u,e,e_hat_sel,j_star`. Row
/// (k, t) reports the post-step quantities: x and x_m at sample t+1, the
/// input applied at t, and the errors on sample t+1.
std::string trace_csv(const ExperimentReport& report);

/// Writes `content` to `path` byte-exactly. Throws IoError on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace ailc
