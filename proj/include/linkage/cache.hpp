#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "json.hpp"
#include "linkage/module.hpp"

namespace linkage {

std::string sha256_hex(const std::string& data);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const Field& f, const nlohmann::json& j);
nlohmann::json resolution_to_json(const Resolution& r);
Resolution resolution_from_json(const GradedRing& ring, const nlohmann::json& j);

/// Content-addressed store of minimal resolutions. Keys are SHA-256 digests of
/// the key material (ring GB, generator twists, reduced relation GB); every
/// entry keeps its material so a lookup only succeeds on an exact match. The
/// in-memory layer is always on; a directory adds a persistent layer.
class ResolutionCache {
 public:
  struct Stats {
    std::size_t hits = 0;
    std::size_t disk_hits = 0;
    std::size_t misses = 0;
    std::size_t writes = 0;
    std::size_t corrupt = 0;
  };

  std::optional<Resolution> get(const GradedRing& ring, const std::string& material);
  /// Stores r unless an entry at least as long is already present.
  void put(const std::string& material, const Resolution& r);

  void set_directory(const std::string& dir);
  std::string directory() const;
  void set_enabled(bool on);
  bool enabled() const;
  void clear_memory();
  Stats stats() const;
  void reset_stats();

 private:
  struct Entry {
    std::string material;
    Resolution resolution;
  };
  mutable std::mutex mu_;
  std::unordered_map<std::string, Entry> memory_;
  std::string dir_;
  bool enabled_ = true;
  Stats stats_;
};

ResolutionCache& resolution_cache();

}  // namespace linkage
