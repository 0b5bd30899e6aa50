#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ailc/harness.hpp"

namespace ailc {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// FNV-1a 64-bit digest of a byte string.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

struct ManifestEntry {
  std::string path;    // relative to the output directory
  std::string digest;  // fnv1a64 hex of the file content
  std::size_t bytes = 0;
};

/// Run provenance: resolved config echo, toolkit version, seeds, and the
/// emitted files with content digests. Serialized as manifest.json next to
/// the outputs.
struct RunManifest {
  std::string version = kToolkitVersion;
  ExperimentConfig config;
  std::vector<std::uint64_t> seeds;
  std::vector<ManifestEntry> outputs;
};

std::string manifest_json(const RunManifest& manifest);

}  // namespace ailc
