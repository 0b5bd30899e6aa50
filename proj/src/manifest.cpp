#include "ailc/manifest.hpp"

#include <cstdio>

#include "ailc/config_io.hpp"
#include "json.hpp"

namespace ailc {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string fnv1a64_hex(const std::string& bytes) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string manifest_json(const RunManifest& manifest) {
  nlohmann::json root;
  root["version"] = manifest.version;
  root["config"] = nlohmann::json::parse(serialize_config(manifest.config));
  root["seeds"] = manifest.seeds;
  root["outputs"] = nlohmann::json::array();
  for (const ManifestEntry& entry : manifest.outputs)
    root["outputs"].push_back(
        {{"path", entry.path}, {"fnv1a64", entry.digest}, {"bytes", entry.bytes}});
  return root.dump(2) + "\n";
}

}  // namespace ailc
